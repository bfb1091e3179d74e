use lode_catalog::Status;
use lode_diffop::RatFun;
use lode_exactnum::{QPoly, Rat};
use lode_groups::GroupId;
use lode_pipeline::cli::run;
use lode_pipeline::example::{closed_form, hauptmodul_value, l_prime};
use lode_pipeline::fixtures::{default_dir, sha256_hex, standard_fixture_json, FixtureError, MANIFEST, STANDARD_FILE};
use lode_pipeline::{verify_example, FixtureSet};
use std::path::PathBuf;

fn fixtures() -> FixtureSet {
    FixtureSet::load_default().expect("fixtures load")
}

fn copy_data(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lode-atlas-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    for e in std::fs::read_dir(default_dir()).unwrap() {
        let e = e.unwrap();
        std::fs::copy(e.path(), dir.join(e.file_name())).unwrap();
    }
    dir
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["lode-atlas"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn standard_fixture_matches_catalog() {
    let text = std::fs::read_to_string(default_dir().join(STANDARD_FILE)).unwrap();
    assert_eq!(text, standard_fixture_json());
}

#[test]
fn manifest_covers_every_fixture() {
    let fx = fixtures();
    assert_eq!(fx.example.lambda, 6);
    assert_eq!(fx.example.operator.order(), 3);
    assert!(fx.standard_equation(GroupId::G168).is_some());
    assert!(fx.standard_equation(GroupId::H72SL3).is_none());
    assert_eq!(fx.readings(GroupId::H216SL3).len(), 2);
    assert_eq!(fx.standard_equation(GroupId::G168xC3).unwrap().group, GroupId::G168);
}

#[test]
fn tampered_fixture_is_rejected() {
    let dir = copy_data("tamper");
    let path = dir.join(STANDARD_FILE);
    let mut text = std::fs::read_to_string(&path).unwrap();
    text.push(' ');
    std::fs::write(&path, &text).unwrap();
    match FixtureSet::load(&dir) {
        Err(FixtureError::Checksum { file, actual, .. }) => {
            assert_eq!(file, STANDARD_FILE);
            assert_eq!(actual, sha256_hex(text.as_bytes()));
        }
        other => panic!("expected a checksum error, got {other:?}"),
    }
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn unlisted_and_missing_fixtures() {
    let dir = copy_data("unlisted");
    let manifest = std::fs::read_to_string(dir.join(MANIFEST)).unwrap();
    let kept: String = manifest.lines().filter(|l| !l.ends_with(STANDARD_FILE)).map(|l| format!("{l}\n")).collect();
    std::fs::write(dir.join(MANIFEST), kept).unwrap();
    assert_eq!(FixtureSet::load(&dir).unwrap_err(), FixtureError::Unlisted(STANDARD_FILE.into()));
    std::fs::write(dir.join(MANIFEST), "not a manifest\n").unwrap();
    assert!(matches!(FixtureSet::load(&dir), Err(FixtureError::Manifest(_))));
    std::fs::remove_file(dir.join(MANIFEST)).unwrap();
    assert!(matches!(FixtureSet::load(&dir), Err(FixtureError::Io { .. })));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn centerpiece_identity() {
    let fx = fixtures();
    let klein = &fx.standard_equation(GroupId::G168).unwrap().operator;
    let s = verify_example(&fx.example, klein);
    assert!(s.passed(), "{:?}", s.checks);
}

#[test]
fn mutated_exponent_breaks_centerpiece() {
    let mut fx = fixtures();
    let klein = fx.standard_equation(GroupId::G168).unwrap().operator.clone();
    // (19t-7)^6 -> (19t-7)^5 in the denominator of f
    fx.example.f = &fx.example.f * &RatFun::from_i64(&[-7, 19], &[1]);
    let s = verify_example(&fx.example, &klein);
    let c = s.check("centerpiece").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(c.witness.as_deref().unwrap().starts_with("coefficient of D^"));
}

#[test]
fn mutated_gauge_breaks_centerpiece() {
    let mut fx = fixtures();
    let klein = fx.standard_equation(GroupId::G168).unwrap().operator.clone();
    fx.example.f1 = RatFun::from_i64(&[0, -14, 14], &[-7, 16]);
    let s = verify_example(&fx.example, &klein);
    assert_eq!(s.check("centerpiece").unwrap().status, Status::Fail);
}

#[test]
fn hauptmodul_value_is_a_cube_root() {
    let fx = fixtures();
    let v = hauptmodul_value(&fx.example).unwrap();
    let expected = RatFun::new(
        QPoly::from_i64(&[0, 0, 0, 0, 0, 0, 0, 3, 1]).scale(&Rat::from_integer((12i64 * 3i64.pow(13)).into())),
        QPoly::from_i64(&[-1, 1]).pow(10).mul(&QPoly::from_i64(&[-7, 19]).pow(14)),
    );
    assert_eq!(v, expected);
    let w = &fx.example.f.pow(7) * &fx.example.h;
    assert_eq!(v.pow(3), w.scale(&Rat::from_integer(1728.into())));
}

#[test]
fn closed_form_readings() {
    let fx = fixtures();
    let klein = fx.standard_equation(GroupId::G168).unwrap();
    let (s, cf) = closed_form(&fx.example, klein);
    let cf = cf.unwrap();
    let status = |n: &str| s.check(n).unwrap_or_else(|| panic!("no check {n}")).status;
    assert_eq!(status("gauge(M',r)=L"), Status::Pass);
    assert_eq!(status("round-trip"), Status::Pass);
    assert_eq!(status("factor(t-21/41)"), Status::Pass);
    // the printed per-term scalars only agree once F' and F'' are read as
    // normalized at the origin
    assert_eq!(status("ratios-consistent"), Status::Fail);
    assert_eq!(status("printed-solves-L"), Status::Fail);
    assert_eq!(status("ratios-consistent[normalized-derivatives]"), Status::Pass);
    assert_eq!(status("printed-solves-L[normalized-derivatives]"), Status::Pass);
    assert_eq!(cf.scalar, None);
    assert_eq!(cf.normalized_scalar, Some(fx.example.closed_form.scalar.clone()));
    assert_eq!(cf.r.len(), 3);
    assert_eq!(cf.converted.len(), 3);
    assert_eq!(l_prime(&fx.example).unwrap().order(), 3);
}

#[test]
fn json_reports_are_deterministic() {
    let a = cli(&["--json", "closed-form"]);
    let b = cli(&["--json", "closed-form"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["schema"], "lode-atlas/report/v1");
    assert_eq!(v["passed"], false);
}

#[test]
fn exit_codes() {
    let (code, out, _) = cli(&["group", "--id", "h72"]);
    assert_eq!(code, 0);
    assert!(out.contains("group:h72/order = 216"), "{out}");
    assert!(out.contains("group:h72/projective_order = 72"), "{out}");
    assert_eq!(cli(&["verify-example"]).0, 0);
    let (code, _, err) = cli(&["verify-standard", "--group", "h72"]);
    assert_eq!(code, 1);
    assert!(err.contains("error:"));
    assert_eq!(cli(&["closed-form"]).0, 1);
    assert_eq!(cli(&["bogus"]).0, 2);
    assert_eq!(cli(&["group", "--id", "g999"]).0, 2);
    assert_eq!(cli(&["verify-standard", "--group", "klein", "--checks", "nonsense"]).0, 2);
    assert_eq!(cli(&["sympower", "--op", "/nonexistent.json", "--degree", "2"]).0, 2);
    assert_eq!(cli(&["--version"]).0, 0);
}

#[test]
fn verify_standard_klein() {
    let (code, out, _) = cli(&["verify-standard", "--group", "klein", "--checks", "series,curve"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
}
