import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from germcodim.cli import main
from germcodim.germfile import GermFileError, format_germ, load_germ, parse_germ_text

GERMS = Path(__file__).resolve().parent.parent / "germs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- germ files -------------------------------------------------------------------------

def test_shipped_germs_load():
    names = {p.stem for p in GERMS.glob("*.germ")}
    assert {"f1", "f2", "f3", "nonfinite_d11", "nonfinite_d15", "nonfinite_d17",
            "crosscap", "cusp_surface", "cusp"} <= names
    for p in GERMS.glob("*.germ"):
        if p.stem == "bad_arity":
            with pytest.raises(GermFileError):
                load_germ(p)
        else:
            load_germ(p)


def test_germfile_roundtrip():
    gf = load_germ(GERMS / "f1.germ")
    again = parse_germ_text(format_germ(gf))
    assert again.germ.components == gf.germ.components
    assert (again.family_k, again.mu_image) == (3, None)
    assert format_germ(again) == format_germ(gf)


def test_germfile_continuation_and_comments():
    text = """
    # comment
    [germ]
    source_vars = x, y
    target_vars = X, Y, Z   # trailing comment
    weights = 1, 1
    degrees = 1, 2, 2
    [components]
    x
    y^2
    x*\\
    y
    """
    gf = parse_germ_text(text)
    assert str(gf.germ.components[2]) == "x*y"


@pytest.mark.parametrize("text,needle", [
    ("[germ]\nsource_vars = x\n", "missing key"),
    ("[germ]\nfoo = 1\n", "unknown key"),
    ("[other]\n", "unknown section"),
    ("x = 1\n", "outside of a section"),
    ("[germ]\nsource_vars=x\ntarget_vars=Y,Z\nweights=1\ndegrees=2,3\ncharacteristic=10\n"
     "[components]\nx^2\nx^3\n", "not a prime"),
    ("[germ]\nsource_vars=x\ntarget_vars=Y,Z\nweights=a\ndegrees=2,3\n[components]\nx^2\nx^3\n",
     "list of integers"),
    ("[germ]\nsource_vars=x\ntarget_vars=Y,Z\nweights=1\ndegrees=2,3\n[components]\nx^2\nx^^3\n",
     "position"),
])
def test_germfile_errors(text, needle):
    with pytest.raises(GermFileError) as ei:
        parse_germ_text(text, "t.germ")
    assert needle in str(ei.value)


# -- commands ----------------------------------------------------------------------------

def test_check_f1(capsys):
    code, out, _ = run(capsys, "check", GERMS / "f1.germ")
    assert code == 0
    assert "corank: 3" in out and "ramification dim: 1" in out and "PASS" in out
    assert "F_31991" in out


def test_check_exit_codes(capsys):
    assert run(capsys, "check", GERMS / "bad_arity.germ")[0] == 1
    code, out, _ = run(capsys, "check", GERMS / "cusp_surface.germ")
    assert code == 2 and "FAIL" in out
    assert run(capsys, "check", GERMS / "missing.germ")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--json", GERMS / "crosscap.germ")
    js = json.loads(out)
    assert code == 0 and js["corank"] == 1 and js["gate"] is True


def test_aecodim_crosscap(capsys):
    code, out, _ = run(capsys, "aecodim", GERMS / "crosscap.germ")
    assert code == 0 and "ae_codim: 0" in out


def test_aecodim_gate(capsys):
    code, _, err = run(capsys, "aecodim", GERMS / "cusp_surface.germ")
    assert code == 2 and "--force" in err
    code, out, _ = run(capsys, "aecodim", "--force", GERMS / "cusp_surface.germ")
    assert code == 0 and "dim N_f (hypothesis unmet): 0" in out


def test_aecodim_timeout(capsys):
    code, _, err = run(capsys, "aecodim", "--timeout", "0.5", GERMS / "f1.germ")
    assert code == 3
    assert "last completed stage" in err


def test_family(capsys):
    assert run(capsys, "family", "--k", "3")[1] == "18967\n"
    assert run(capsys, "family", "--k", "6")[1] == "127295\n"
    assert run(capsys, "family", "--k", "1")[1] == "1280\n"
    assert run(capsys, "family", "--k", "0")[0] == 1


def test_greuel(capsys):
    assert run(capsys, "greuel", "--tau", "168356", "--cmtype", "16")[1] == "168341\n"
    assert run(capsys, "greuel", "--tau", "127", "--cmtype", "3")[1] == "125\n"
    assert run(capsys, "greuel", "--tau", "1", "--cmtype", "1")[1] == "1\n"
    assert run(capsys, "greuel", "--tau", "0", "--cmtype", "3")[0] == 1


def test_report_json_schema(capsys):
    code, out, _ = run(capsys, "report", "--json", GERMS / "crosscap.germ")
    js = json.loads(out)
    assert code == 0
    assert list(js) == ["germ", "corank", "ramification_dim", "gate", "multiplicity",
                        "ae_codim", "mu_image", "verdict", "characteristic", "timings_ms",
                        "errors"]
    assert js["verdict"] == "EQUAL" and js["mu_image"] == 0 and js["timings_ms"] == {}
    assert json.loads(json.dumps(js)) == js


def test_report_without_mu(capsys):
    code, out, _ = run(capsys, "report", "--json", GERMS / "cusp_surface.germ")
    js = json.loads(out)
    assert js["verdict"] == "NOT_APPLICABLE" and js["errors"]
    assert js["multiplicity"] == 2


def test_report_mu_override(capsys):
    _, out, _ = run(capsys, "report", "--json", "--mu-image", "4", GERMS / "crosscap.germ")
    assert json.loads(out)["verdict"] == "MU_GREATER"


def test_report_timings_opt_in(capsys):
    _, out, _ = run(capsys, "report", "--json", "--timings", GERMS / "crosscap.germ")
    assert set(json.loads(out)["timings_ms"]) >= {"image", "preimage", "quotient"}


def test_char_override(capsys):
    _, out, _ = run(capsys, "report", "--json", "--char", "101", GERMS / "crosscap.germ")
    js = json.loads(out)
    assert js["characteristic"] == 101 and js["ae_codim"] == 0
    assert run(capsys, "check", "--char", "100", GERMS / "crosscap.germ")[0] == 1


def test_output_deterministic_across_runs_and_jobs(capsys):
    files = [GERMS / "crosscap.germ", GERMS / "cusp.germ", GERMS / "cusp_surface.germ"]
    first = run(capsys, "report", "--json", *files)
    second = run(capsys, "report", "--json", *files)
    parallel = run(capsys, "report", "--json", "--jobs", "3", *files)
    assert first == second == parallel


def test_module_entry_point():
    env = dict(os.environ)
    res = subprocess.run([sys.executable, "-m", "germcodim", "family", "--k", "4"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0 and res.stdout == "41244\n"
