import io
import json

from septic_index.cli import main
from septic_index.scan import ScanConfig, default_allowlist, run_scan, scan_pair, write_jsonl


def test_scan_pair_records():
    rec = scan_pair(7, 56)
    assert rec["status"] == "ok" and rec["discrepancies"] == []
    assert rec["primes"]["2"]["condition"] == "Thm1.1(1)"
    assert scan_pair(3, 0)["reason"] == "b=0"
    assert scan_pair(7, 8)["reason"].startswith("reducible")


def test_example1_marker_in_scan():
    rec = scan_pair(17, 51)
    assert rec["example_marker"] == "Example1"
    assert "Example1" in rec["discrepancies"]


def test_allowlist_contents():
    allowed = set(default_allowlist())
    assert {"Example1", "Thm1.1(3)", "Thm1.1(4)", "Thm1.1(5)", "Thm1.1(6)", "Thm1.1(8)", "Thm1.2(6)"} <= allowed
    assert not any(c.startswith("Thm1.2(") and c != "Thm1.2(6)" for c in allowed)


def _jsonl(cfg):
    buf = io.StringIO()
    write_jsonl(run_scan(cfg).records, buf)
    return buf.getvalue()


def test_scan_is_deterministic_across_worker_counts():
    serial = _jsonl(ScanConfig(0, 9, 0, 15, (2, 3), workers=1))
    parallel = _jsonl(ScanConfig(0, 9, 0, 15, (2, 3), workers=2))
    assert serial == parallel
    lines = serial.splitlines()
    assert len(lines) == 160
    keys = [(json.loads(x)["a"], json.loads(x)["b"]) for x in lines]
    assert keys == sorted(keys)


def test_empty_range_exit_0(tmp_path, capsys):
    out = tmp_path / "empty.jsonl"
    code = main(["scan", "--a-min", "5", "--a-max", "4", "--b-min", "0", "--b-max", "3", "--out", str(out)])
    assert code == 0
    assert out.read_text() == ""


def test_allowlisted_grid_exit_0(tmp_path):
    out = tmp_path / "small.jsonl"
    code = main(["scan", "--a-min", "0", "--a-max", "7", "--b-min", "0", "--b-max", "7", "--primes", "2", "--out", str(out)])
    assert code == 0


def test_new_class_exit_1(tmp_path):
    allow = tmp_path / "allow.json"
    allow.write_text(json.dumps({"classes": []}))
    code = main(
        ["scan", "--a-min", "1", "--a-max", "1", "--b-min", "4", "--b-max", "4", "--primes", "2", "--allowlist", str(allow)]
    )
    assert code == 1


def test_io_failure_exit_2(tmp_path):
    code = main(["scan", "--a-min", "0", "--a-max", "1", "--b-min", "0", "--b-max", "1", "--out", str(tmp_path / "no" / "x.jsonl")])
    assert code == 2
    code = main(["scan", "--a-min", "0", "--a-max", "1", "--b-min", "0", "--b-max", "1", "--allowlist", str(tmp_path / "missing.json")])
    assert code == 2


def test_first_order_throughput():
    import time

    from septic_index.exact import Trinomial
    from septic_index.splitter import engstrom_criterion, splitting_type

    # (a, b) with 5 | a, 5 | b, 25 does not divide b: a single Eisenstein-type polygon
    pairs = [(5 * a, 5 * b) for a in range(1, 40) for b in range(1, 40) if b % 5]
    start = time.perf_counter()
    n = 0
    for a, b in pairs:
        t = Trinomial(a, b)
        for p in (5, 7):
            engstrom_criterion(splitting_type(t, p), p)
            n += 1
    rate = n / (time.perf_counter() - start)
    assert rate >= 1000, f"{rate:.0f} evaluations per second"
