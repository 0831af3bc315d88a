"""
A module containing the JSON streams the harnesses talk through. Run reports are written to stdout as one JSON
value each, and the soundness checker reads a stream of concatenated JSON instances (as produced by the fuzzer)
from stdin.
"""
import json
import sys
from io import StringIO
from typing import Callable, Iterator, List, Optional, TextIO, Tuple, cast

from Common.geo_types import JSON
from Common.result import Result, error, ok
from Common.validation import validate_types

CLOSED_INPUT_PREFIX = "CLOSED_MESSAGE: "


def json_dump(msg: JSON) -> str:
    """
    Dump the given JSON value to a string. Keys are sorted so that reports are byte-identical across runs.
    :param msg:     The JSON message to dump
    :return:        The string encoding of the given JSON value
    """
    return json.dumps(msg, ensure_ascii=True, sort_keys=True)


# Characters that may directly follow a complete number
_VALUE_DELIMITERS = frozenset(" \t\r\n[]{}\",:")


class _JSONValueReader:
    """
    Reads consecutive JSON values from a text stream one character at a time. Characters read past the end of a
    value are kept for the next value.
    """

    def __init__(self, get_stream: Callable[[], TextIO]) -> None:
        self.get_stream = get_stream
        self.pending = ""
        self.decoder = json.JSONDecoder()

    def _decode_prefix(self, text: str, at_end: bool) -> Optional[Tuple[JSON, int]]:
        try:
            value, end = self.decoder.raw_decode(text)
        except json.JSONDecodeError:
            return None
        is_number = isinstance(value, (int, float)) and not isinstance(value, bool)
        if is_number and not (at_end and end == len(text)):
            # "1" may still become "12" or "1.5"
            if end == len(text) or text[end] not in _VALUE_DELIMITERS:
                return None
        return cast(JSON, value), end

    def read(self) -> Result[JSON]:
        """
        Read the next JSON value. Leading whitespace between values is skipped.
        """
        while True:
            text = self.pending.lstrip()
            decoded = self._decode_prefix(text, at_end=False) if text else None
            if decoded is not None:
                value, end = decoded
                self.pending = text[end:]
                return ok(value)
            new_char = self.get_stream().read(1)
            if new_char == "":
                return self._read_at_end()
            self.pending += new_char

    def _read_at_end(self) -> Result[JSON]:
        text = self.pending.strip()
        self.pending = ""
        if not text:
            return error(f"{CLOSED_INPUT_PREFIX} cannot read message because the input is closed")
        decoded = self._decode_prefix(text, at_end=True)
        if decoded is None or decoded[1] != len(text):
            return error(f"input ended inside a JSON value: {text!r}")
        return ok(decoded[0])


class JSONStream:
    # pylint: disable=no-self-use, unused-argument
    """
    Represents an abstract class for JSON streams that read and write JSON values
    """

    def send_message(self, msg: JSON) -> Result[None]:
        """
        Send the given JSON value over this JSON stream
        :param msg:     The JSON value to send
        :return:        A result indicating whether or not it was sent successfully
        """
        return error("send_message not implemented in JSONStream interface")

    def receive_message(self) -> Result[JSON]:
        """
        Receive a JSON message from this JSON stream
        :return:    A Result containing the received JSON message or an error. The error contains the string
                    `CLOSED_INPUT_PREFIX` if the error is due to a closed input
        """
        return error("receive_message not implemented in JSONStream interface")

    def message_iterator(self) -> Iterator[Result[JSON]]:
        """
        Returns an iterator that reads JSON messages from this JSON stream
        :return:    An iterator of results of JSON messages. Stops once the underlying input is exhausted.
        """
        while True:
            msg_r = self.receive_message()
            if (
                msg_r.is_error()
                and CLOSED_INPUT_PREFIX
                in msg_r.error()  # pylint: disable=unsupported-membership-test
            ):
                return
            yield msg_r


class StdinStdoutJSONStream(JSONStream):
    """
    A JSONStream implementation that reads from stdin and writes to stdout
    """

    def __init__(self) -> None:
        self.reader = _JSONValueReader(lambda: sys.stdin)

    @validate_types
    def send_message(self, msg: JSON) -> Result[None]:
        print(json_dump(msg))
        return ok(None)

    @validate_types
    def receive_message(self) -> Result[JSON]:
        return self.reader.read()


class StringJSONStream(JSONStream):
    """
    A JSON stream that reads from a string and records everything sent to it. Used to drive the harnesses from
    tests without touching stdin or stdout.
    """

    def __init__(self, string: str = "") -> None:
        self.string_io = StringIO(string)
        self.reader = _JSONValueReader(lambda: self.string_io)
        self.sent: List[JSON] = []

    @validate_types
    def receive_message(self) -> Result[JSON]:
        return self.reader.read()

    @validate_types
    def send_message(self, msg: JSON) -> Result[None]:
        self.sent.append(msg)
        return ok(None)
