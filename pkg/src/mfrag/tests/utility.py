import io
import logging
import unittest


logger = logging.getLogger(__name__)


class RoundTripTestCase(unittest.TestCase):
    """A serializer test should subclass this class and set the class property
    FORMAT to the correct value (e.g. 'pmx', 'mtd', 'ctx').
    """

    FORMAT = None  # a subclass should change this

    def deserialize_args(self):
        return {}

    def assertEquivalent(self, first, second, msg=None):
        self.assertEqual(first, second, msg)

    def assertRoundTripEquivalence(self, obj, msg=None):
        if self.FORMAT is None:
            # This is a dummy test, just return
            return

        with io.StringIO() as stream:
            obj.serialize(destination=stream, format=self.FORMAT)
            content = stream.getvalue()
            stream.seek(0, 0)
            new = type(obj).deserialize(
                source=stream, format=self.FORMAT, **self.deserialize_args()
            )
        msg_extra = "'%s' serialization content:\n%s" % (self.FORMAT, content)
        msg = "\n".join((msg, msg_extra)) if msg else msg_extra
        self.assertEquivalent(obj, new, msg)
        # byte-stable: writing the parsed object gives the same text
        self.assertEqual(content, new.serialize(format=self.FORMAT), msg)
