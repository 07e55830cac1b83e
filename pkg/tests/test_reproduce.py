import shutil

from relaus import reproduce as rp


def test_corrupted_fixture_names_failing_check(tmp_path):
    shutil.copytree(rp.FIXTURE_DIR, tmp_path / "fx")
    alg = tmp_path / "fx" / "sq.alg"
    alg.write_text(alg.read_text().replace("relation n*a - g*b", ""))
    res = rp.run_all(tmp_path / "fx")
    failed = [r for r in res if r.status == "fail"]
    assert [r.name for r in failed] == ["fixture sq dimension 9"]
    assert failed[0].detail == "10"


def test_field_independence():
    qq = rp.run_all(field_spec="QQ")
    gf7 = rp.run_all(field_spec="GF:7")
    assert [(r.id, r.name, r.status, r.detail) for r in qq] == \
        [(r.id, r.name, r.status, r.detail) for r in gf7]


def test_only_known_failure():
    res = rp.run_all()
    assert {(r.id, r.name) for r in res if r.status != "pass"} == rp.EXPECTED_FAILURES
    assert all(r.status == "xfail" for r in res if r.status != "pass")
    assert len({r.id for r in res}) == 11


def test_duality_instance_count(fx):
    assert len(rp.duality_instances(fx)) >= 200
