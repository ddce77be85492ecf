# *******************************************************************************
# Copyright (c) 2025 Contributors to the Eclipse Foundation
#
# See the NOTICE file(s) distributed with this work for additional
# information regarding copyright ownership.
#
# This program and the accompanying materials are made available under the
# terms of the Apache License Version 2.0 which is available at
# https://www.apache.org/licenses/LICENSE-2.0
#
# SPDX-License-Identifier: Apache-2.0
# *******************************************************************************

import json
from collections.abc import Callable
from typing import Any
from unittest.mock import patch

import pytest
from src.knotforge.main import main

BuildFakeFilesystem = Callable[[dict[str, object]], None]

Z = {"rank": 1, "torsion": []}
ZERO = {"rank": 0, "torsion": []}


def run_json(args: list[str], capsys: pytest.CaptureFixture[str]) -> Any:
    main([*args, "--format", "json"])
    return json.loads(capsys.readouterr().out)


def exit_code(args: list[str]) -> int | str | None:
    with pytest.raises(SystemExit) as e:
        main(args)
    return e.value.code


class TestKnotCommand:
    def test_trefoil(self, capsys: pytest.CaptureFixture[str]):
        report = run_json(["knot", "3_1"], capsys)
        assert list(report) == [
            "source",
            "pi1",
            "pi1_simplified",
            "h0",
            "h1",
            "h2",
            "boundary",
            "colorings",
        ]
        assert report["source"] == {
            "kind": "table",
            "name": "3_1",
            "pd": "X(3,1,4,6) X(5,3,6,2) X(1,5,2,4)",
        }
        assert report["pi1"]["generators"] == ["a", "b", "c"]
        assert len(report["pi1"]["relators"]) == 2
        assert (report["h0"], report["h1"], report["h2"]) == (Z, Z, ZERO)
        assert report["boundary"] == [[0, 1, -1], [-1, 0, 1]]
        assert report["colorings"] == {"3": 9, "5": 5, "7": 7}

    @pytest.mark.parametrize(
        ("name", "generators"), [("4_1", 4), ("5_1", 5), ("5_2", 5)]
    )
    def test_other_knots(
        self, name: str, generators: int, capsys: pytest.CaptureFixture[str]
    ):
        report = run_json(["knot", name], capsys)
        assert len(report["pi1"]["generators"]) == generators
        assert len(report["pi1"]["relators"]) == generators - 1
        assert (report["h0"], report["h1"], report["h2"]) == (Z, Z, ZERO)

    def test_pd_matches_table(self, capsys: pytest.CaptureFixture[str]):
        from_pd = run_json(["knot", "--pd", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"], capsys)
        from_table = run_json(["knot", "3_1"], capsys)
        assert from_pd["source"] == {
            "kind": "pd",
            "code": "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        }
        for key in ("h0", "h1", "h2", "colorings"):
            assert from_pd[key] == from_table[key]

    def test_gauss(self, capsys: pytest.CaptureFixture[str]):
        report = run_json(["knot", "--gauss", "O1+U2+O3+U1+O2+U3+"], capsys)
        assert report["source"]["kind"] == "gauss"
        assert report["h1"] == Z
        assert report["colorings"]["3"] == 9

    def test_keep_redundant(self, capsys: pytest.CaptureFixture[str]):
        report = run_json(["knot", "3_1", "--keep-redundant"], capsys)
        assert len(report["pi1"]["relators"]) == 3
        assert report["h2"] == ZERO

    def test_custom_colorings(self, capsys: pytest.CaptureFixture[str]):
        report = run_json(["knot", "4_1", "--colorings", "5"], capsys)
        assert report["colorings"] == {"5": 25}

    def test_whole_table(self, capsys: pytest.CaptureFixture[str]):
        reports = run_json(["knot"], capsys)
        assert [r["source"]["name"] for r in reports][:5] == [
            "0_1",
            "3_1",
            "4_1",
            "5_1",
            "5_2",
        ]

    def test_output_is_deterministic(self, capsys: pytest.CaptureFixture[str]):
        main(["knot", "4_1", "--format", "json"])
        first = capsys.readouterr().out
        main(["knot", "4_1", "--format", "json"])
        assert capsys.readouterr().out == first

    def test_text_format(self, capsys: pytest.CaptureFixture[str]):
        main(["knot", "3_1"])
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0].startswith("3_1 ")
        assert "writhe 3" in lines[0]
        assert "determinant 3" in lines[0]
        assert any(line.split() == ["H1", "Z"] for line in lines)
        assert any(line.split() == ["H2", "0"] for line in lines)
        assert "n=3: 9" in out

    def test_unknown_knot(self, capsys: pytest.CaptureFixture[str]):
        assert exit_code(["knot", "nonexistent_99"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Unknown knot 'nonexistent_99'" in captured.err

    def test_malformed_code(self, capsys: pytest.CaptureFixture[str]):
        assert exit_code(["knot", "--pd", "X(1,2,3"]) == 2
        assert "error" in capsys.readouterr().err.lower()

    def test_link_rejected(self):
        assert exit_code(["knot", "--pd", "X(4,1,3,2) X(2,3,1,4)"]) == 2

    def test_names_and_code(self):
        assert exit_code(["knot", "3_1", "--pd", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"]) == 2

    def test_internal_error(self, capsys: pytest.CaptureFixture[str]):
        with patch("src.knotforge.main.knot_report", side_effect=RuntimeError("boom")):
            assert exit_code(["knot", "3_1"]) == 1
        assert "internal error: boom" in capsys.readouterr().err

    def test_verbose_logs_progress(self, capsys: pytest.CaptureFixture[str]):
        main(["-v", "knot", "3_1"])
        assert "Computing invariants of 3_1" in capsys.readouterr().err

    def test_quiet_by_default(self, capsys: pytest.CaptureFixture[str]):
        with patch.dict("os.environ", {}, clear=True):
            main(["knot", "3_1"])
        assert capsys.readouterr().err == ""


class TestHeegaardCommand:
    def test_projective_space(
        self,
        build_fake_filesystem: BuildFakeFilesystem,
        capsys: pytest.CaptureFixture[str],
    ):
        build_fake_filesystem({"p3.txt": "genus 1\na a\n"})
        report = run_json(["heegaard", "/p3.txt"], capsys)
        assert report["source"] == {"kind": "heegaard", "path": "/p3.txt"}
        assert report["pi1"]["text"] == "⟨a | a^2⟩"
        assert report["h1"] == {"rank": 0, "torsion": [2]}
        assert "h2" not in report
        assert "colorings" not in report

    def test_several_files(
        self,
        build_fake_filesystem: BuildFakeFilesystem,
        capsys: pytest.CaptureFixture[str],
    ):
        build_fake_filesystem(
            {"s3.txt": "genus 1\na\n", "handlebody.txt": "genus 3\n"}
        )
        reports = run_json(["heegaard", "/s3.txt", "/handlebody.txt"], capsys)
        assert [r["h1"] for r in reports] == [ZERO, {"rank": 3, "torsion": []}]
        assert reports[0]["pi1_simplified"]["generators"] == []

    def test_missing_file(
        self,
        build_fake_filesystem: BuildFakeFilesystem,
        capsys: pytest.CaptureFixture[str],
    ):
        build_fake_filesystem({"dir": {}})
        assert exit_code(["heegaard", "/dir/missing.txt"]) == 2
        assert "missing.txt" in capsys.readouterr().err

    def test_bad_file(self, build_fake_filesystem: BuildFakeFilesystem):
        build_fake_filesystem({"bad.txt": "genus one\n"})
        assert exit_code(["heegaard", "/bad.txt"]) == 2

    def test_not_utf8(
        self,
        build_fake_filesystem: BuildFakeFilesystem,
        capsys: pytest.CaptureFixture[str],
    ):
        build_fake_filesystem({"binary.txt": b"genus 1\n\xff\xfe a a\n"})
        assert exit_code(["heegaard", "/binary.txt"]) == 2
        err = capsys.readouterr().err
        assert "not valid UTF-8" in err
        assert "internal error" not in err


class TestTableCommand:
    def test_list(self, capsys: pytest.CaptureFixture[str]):
        main(["table", "list"])
        names = capsys.readouterr().out.split()
        for name in ("3_1", "4_1", "5_1", "5_2"):
            assert name in names

    def test_show(self, capsys: pytest.CaptureFixture[str]):
        main(["table", "show", "4_1"])
        assert capsys.readouterr().out.strip() == (
            "X(2,7,3,8) X(6,3,7,4) X(8,6,1,5) X(4,2,5,1)"
        )

    def test_show_unknown(self):
        assert exit_code(["table", "show", "zzz"]) == 2

    def test_show_needs_name(self):
        assert exit_code(["table", "show"]) == 2

    def test_custom_table_from_environment(
        self,
        build_fake_filesystem: BuildFakeFilesystem,
        capsys: pytest.CaptureFixture[str],
    ):
        build_fake_filesystem({"mine.tsv": "unknot\t\n"})
        with patch.dict("os.environ", {"KNOTFORGE_TABLE": "/mine.tsv"}):
            main(["table", "list"])
        assert capsys.readouterr().out.split() == ["unknot"]

    def test_table_not_utf8(
        self,
        build_fake_filesystem: BuildFakeFilesystem,
        capsys: pytest.CaptureFixture[str],
    ):
        build_fake_filesystem({"binary.tsv": b"3_1\t\xff\xfe\n"})
        assert exit_code(["table", "list", "--table", "/binary.tsv"]) == 2
        err = capsys.readouterr().err
        assert "not valid UTF-8" in err
        assert "internal error" not in err
