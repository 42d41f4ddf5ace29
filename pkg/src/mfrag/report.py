"""Command reports.

A report echoes the command, describes the input instances by digest and
carries the command's result payload. The JSON form has sorted keys; the text
form is rendered from the same payload.
"""

import logging

from mfrag.serializers import Serializable

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


class Report(Serializable):
    """Result of one CLI command."""

    default_format = "json"

    def __init__(self, command, instances=None, payload=None):
        """
        Constructor.

        :param command: The command echo, a list of strings.
        :param instances: Instance descriptions, e.g. from
            :py:meth:`~mfrag.matroid.Matroid.describe`.
        :param payload: JSON-friendly result of the command.
        """
        self.command = list(command)
        self.instances = list(instances or [])
        self.payload = payload if payload is not None else {}

    def to_dict(self):
        return {
            "command": self.command,
            "instances": self.instances,
            "result": self.payload,
        }

    @classmethod
    def from_dict(cls, content):
        return cls(
            content.get("command", []),
            content.get("instances", []),
            content.get("result", {}),
        )

    def to_text(self):
        lines = ["command: %s" % " ".join(self.command)]
        for instance in self.instances:
            lines.extend(_text_lines(instance, 0, "instance"))
        lines.extend(_text_lines(self.payload, 0, "result"))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return isinstance(other, Report) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<Report: %s>" % " ".join(self.command)


def _scalar(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)) and not any(
        isinstance(v, (dict, list, tuple)) for v in value
    ):
        return ", ".join(_scalar(v) for v in value) if value else "(none)"
    return str(value)


def _text_lines(value, depth, key):
    pad = "  " * depth
    if isinstance(value, dict):
        lines = ["%s%s:" % (pad, key)]
        for name in sorted(value):
            lines.extend(_text_lines(value[name], depth + 1, name))
        return lines
    if isinstance(value, (list, tuple)) and any(
        isinstance(v, (dict, list, tuple)) for v in value
    ):
        lines = ["%s%s:" % (pad, key)]
        for i, item in enumerate(value, 1):
            lines.extend(_text_lines(item, depth + 1, "[%d]" % i))
        return lines
    if isinstance(value, str) and "\n" in value:
        return ["%s%s:" % (pad, key)] + [
            "%s  %s" % (pad, line) for line in value.splitlines()
        ]
    return ["%s%s: %s" % (pad, key, _scalar(value))]
