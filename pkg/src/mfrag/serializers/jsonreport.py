import json
import logging

from mfrag.serializers import Serializer, SerializerException

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)


class JSONReportException(SerializerException):
    pass


class JSONReportSerializer(Serializer):
    """Serializer for :py:class:`~mfrag.report.Report` as JSON with sorted keys."""

    def serialize(self, stream, **kwargs):
        """
        Serializes a report.

        :param kwargs: Passed on to :py:func:`json.dumps`; ``indent`` defaults
            to 2 and ``sort_keys`` is always set.
        """
        kwargs.setdefault("indent", 2)
        kwargs["sort_keys"] = True
        text = json.dumps(self.obj.to_dict(), **kwargs)
        self.write(stream, text + "\n")

    def deserialize(self, stream, **kwargs):
        from mfrag.report import Report

        kwargs.pop("base_dir", None)
        kwargs.pop("validate", None)
        try:
            content = json.load(stream, **kwargs)
        except ValueError as exc:
            raise JSONReportException("Invalid JSON report: %s" % exc)
        if not isinstance(content, dict) or "command" not in content:
            raise JSONReportException("Not a report")
        return Report.from_dict(content)
