import http.server
import threading

import pytest

from seqverify.bfile import (
    BFile,
    BFileParseError,
    HTTPStatusError,
    NetworkError,
    bundled_bfile,
    bundled_sequence_ids,
    fetch_bfile,
    parse_bfile,
    render_bfile,
)
from seqverify.cases import builtin_case
from seqverify.sequences import Provenance

import laws


class TestParse:
    def test_reference_lines(self):
        parsed = parse_bfile("2 1\n3 3\n4 -1\n")
        assert parsed.entries == ((2, 1), (3, 3), (4, -1))

    def test_comments_and_blank_lines_ignored(self):
        parsed = parse_bfile("# comment\n\n2 1\n")
        assert parsed.entries == ((2, 1),)

    def test_gap_reported_with_line_number(self):
        with pytest.raises(BFileParseError) as err:
            parse_bfile("2 1\n4 -1\n")
        assert err.value.line == 2
        assert "line 2" in str(err.value)

    def test_duplicate_index(self):
        with pytest.raises(BFileParseError) as err:
            parse_bfile("2 1\n2 1\n")
        assert "duplicate" in str(err.value)

    def test_malformed_lines(self):
        for text in ("2\n", "2 x\n", "2 1 9\n"):
            with pytest.raises(BFileParseError):
                parse_bfile(text)

    def test_empty_input(self):
        with pytest.raises(BFileParseError):
            parse_bfile("# nothing\n")

    def test_extra_whitespace_tolerated(self):
        parsed = parse_bfile("  2\t1 \n 3  3\n")
        assert parsed.entries == ((2, 1), (3, 3))

    def test_bad_sequence_id_rejected_before_parsing(self):
        with pytest.raises(ValueError):
            parse_bfile("2 1\n", sequence_id="X123")


class TestRender:
    def test_exact_bytes(self):
        text = render_bfile(BFile(None, ((2, 1), (3, 3))))
        assert text == "2 1\n3 3\n"

    def test_round_trip_on_canonical_text(self):
        text = "2 1\n3 3\n4 -1\n"
        assert render_bfile(parse_bfile(text)) == text

    def test_round_trip_law(self):
        laws.bfile_round_trip_law(cases=500)


class TestFixtures:
    def test_bundled_ids(self):
        assert bundled_sequence_ids() == ("A001711", "A045406")

    def test_a045406_fixture_matches_printed_values(self):
        table = bundled_bfile("A045406").to_table()
        assert table.provenance is Provenance.BFILE
        assert [table[k] for k in range(2, 12)] == [
            1, 3, -1, 0, 4, -28, 188, -1368, 11016, -98208,
        ]

    def test_a045406_fixture_matches_closed_form(self):
        filed = bundled_bfile("A045406")
        closed = builtin_case("A045406").closed_form
        for k, value in filed.entries:
            if k >= 3:
                assert value == closed.value(k)

    def test_a001711_fixture_matches_closed_form(self):
        filed = bundled_bfile("A001711")
        closed = builtin_case("A001711").closed_form
        for k, value in filed.entries:
            assert value == closed.value(k)

    def test_unknown_fixture(self):
        with pytest.raises(KeyError):
            bundled_bfile("A000001")


class _Handler(http.server.BaseHTTPRequestHandler):
    payloads: dict[str, bytes] = {}

    def do_GET(self):
        payload = self.payloads.get(self.path)
        if payload is None:
            self.send_error(404)
            return
        self.send_response(200)
        self.send_header("Content-Type", "text/plain")
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


@pytest.fixture()
def local_server():
    server = http.server.ThreadingHTTPServer(("127.0.0.1", 0), _Handler)
    _Handler.payloads = {}
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    try:
        yield server, f"http://127.0.0.1:{server.server_address[1]}"
    finally:
        server.shutdown()
        thread.join()


class TestFetch:
    def test_id_pattern_checked_before_any_io(self, tmp_path):
        with pytest.raises(ValueError):
            fetch_bfile("X123", base_url="http://127.0.0.1:1", cache_dir=tmp_path)

    def test_fetch_parses_and_caches(self, local_server, tmp_path):
        server, base = local_server
        fixture = render_bfile(bundled_bfile("A045406")).encode()
        _Handler.payloads["/A045406/b045406.txt"] = fixture
        fetched = fetch_bfile("A045406", base_url=base, cache_dir=tmp_path)
        closed = builtin_case("A045406").closed_form
        for k, value in fetched.entries:
            if k >= 3:
                assert value == closed.value(k)
        assert (tmp_path / "b045406.txt").read_bytes() == fixture
        assert not list(tmp_path.glob("*.part"))

    def test_warm_cache_skips_network(self, local_server, tmp_path):
        server, base = local_server
        fixture = render_bfile(bundled_bfile("A045406")).encode()
        _Handler.payloads["/A045406/b045406.txt"] = fixture
        fetch_bfile("A045406", base_url=base, cache_dir=tmp_path)
        server.shutdown()
        again = fetch_bfile("A045406", base_url=base, cache_dir=tmp_path)
        assert again.entries == parse_bfile(fixture).entries

    def test_http_status_error(self, local_server, tmp_path):
        _, base = local_server
        with pytest.raises(HTTPStatusError) as err:
            fetch_bfile("A000001", base_url=base, cache_dir=tmp_path)
        assert err.value.status == 404

    def test_network_error(self, tmp_path):
        with pytest.raises(NetworkError):
            fetch_bfile("A045406", base_url="http://127.0.0.1:1", cache_dir=tmp_path)

    def test_parse_failure_leaves_no_cache_file(self, local_server, tmp_path):
        _, base = local_server
        _Handler.payloads["/A045406/b045406.txt"] = b"2 1\n9 9\n"
        with pytest.raises(BFileParseError):
            fetch_bfile("A045406", base_url=base, cache_dir=tmp_path)
        assert not (tmp_path / "b045406.txt").exists()

    def test_base_url_from_environment(self, local_server, tmp_path, monkeypatch):
        _, base = local_server
        fixture = render_bfile(bundled_bfile("A001711")).encode()
        _Handler.payloads["/A001711/b001711.txt"] = fixture
        monkeypatch.setenv("OEIS_BASE_URL", base)
        fetched = fetch_bfile("A001711", cache_dir=tmp_path)
        assert fetched.start == 0

    def test_cache_dir_from_environment(self, local_server, tmp_path, monkeypatch):
        _, base = local_server
        fixture = render_bfile(bundled_bfile("A001711")).encode()
        _Handler.payloads["/A001711/b001711.txt"] = fixture
        monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_path / "nested"))
        fetch_bfile("A001711", base_url=base)
        assert (tmp_path / "nested" / "b001711.txt").exists()
