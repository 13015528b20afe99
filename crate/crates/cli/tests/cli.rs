use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn catpb(args: &[&str], files: &[PathBuf]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catpb"))
        .args(args)
        .args(files)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

const MAPS: &str = "\
functor F : Arrow -> Diamond
object 0 -> bot
object 1 -> a
mor f -> bot_a

functor G : Arrow -> Diamond
object 0 -> b
object 1 -> top
mor f -> b_top

functor Collapse : Diamond -> Arrow
object bot -> 0
object a -> 1
object b -> 1
object top -> 1
mor bot_a -> f
mor bot_b -> f
mor a_top -> id_1
mor b_top -> id_1
mor bot_top -> f

nattrans t : F => G
component 0 -> bot_b
component 1 -> a_top
";

fn maps_file(dir: &tempfile::TempDir) -> PathBuf {
    let path = dir.path().join("maps.cat");
    fs::write(&path, MAPS).unwrap();
    path
}

#[test]
fn pullbacks_lists_one_canonical_square_per_cospan() {
    let out = catpb(&["pullbacks", "--json"], &[fixture("diamond.cat")]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["verdict"], "pass");
    let squares = r["witnesses"].as_array().unwrap();
    assert_eq!(squares.len(), 25);
    let meet = squares
        .iter()
        .find(|w| w["cospan"] == serde_json::json!(["a_top", "b_top"]))
        .unwrap();
    assert_eq!(meet["apex"], "bot");
}

#[test]
fn v_fails_with_cospan_counterexample() {
    let out = catpb(&["pullbacks"], &[fixture("v.cat")]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cospan f -> c <- g in V"), "{text}");
}

#[test]
fn exhaustive_pullbacks_lists_every_square_in_z2() {
    let out = catpb(
        &["pullbacks", "--exhaustive", "--json"],
        &[fixture("z2.cat")],
    );
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    // four cospans, two pullback squares each
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 8);
    assert_eq!(r["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let run = || {
        let mut r = json(&catpb(
            &["ccc", "--json"],
            &[fixture("arrow.cat"), fixture("diamond.cat")],
        ));
        r.as_object_mut().unwrap().remove("timing_ms");
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn ccc_with_three_categories_checks_the_currying_iso() {
    let out = catpb(
        &["ccc", "--json"],
        &[
            fixture("one.cat"),
            fixture("arrow.cat"),
            fixture("diamond.cat"),
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let names: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.iter().any(|n| n.starts_with("uncurry . curry")));
    assert!(names.iter().any(|n| n.starts_with("currying natural")));
}

#[test]
fn same_file_twice_supplies_the_category_twice() {
    let out = catpb(&["ccc"], &[fixture("arrow.cat"), fixture("arrow.cat")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ccc_on_v_fails_without_error() {
    let out = catpb(&["ccc", "--json"], &[fixture("v.cat"), fixture("one.cat")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "fail");
}

#[test]
fn hom_output_writes_category_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("hom.cat");
    let out = catpb(
        &["hom", "-o", target.to_str().unwrap()],
        &[fixture("arrow.cat"), fixture("diamond.cat")],
    );
    assert_eq!(out.status.code(), Some(0));
    let tables: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("hom.tables.json")).unwrap())
            .unwrap();
    assert_eq!(tables["kind"], "hom");
    assert_eq!(tables["objects"].as_array().unwrap().len(), 9);
    let back = catpb(&["validate", "--json"], &[target]);
    assert_eq!(back.status.code(), Some(0));
}

#[test]
fn product_output_round_trips_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("prod");
    let out = catpb(
        &["product", "-o", target.to_str().unwrap()],
        &[fixture("diamond.cat"), fixture("arrow.cat")],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.path().join("prod.tables.json").exists());
    let back = catpb(&["validate"], &[dir.path().join("prod.cat")]);
    // 8 objects, 18 morphisms: within the default caps
    assert_eq!(back.status.code(), Some(0));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cat");
    fs::write(
        &bad,
        "category D\nobject a b c\nmor f : a -> b\nmor g : b -> c\nmor h : a -> c\n",
    )
    .unwrap();
    let out = catpb(&["validate", "--json"], &[bad]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["verdict"], "error");
    assert!(
        r["error"].as_str().unwrap().contains("bad.cat:4:"),
        "{}",
        r["error"]
    );
}

#[test]
fn size_guard_exits_2() {
    let out = catpb(
        &["validate", "--max-morphisms", "3"],
        &[fixture("diamond.cat")],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        catpb(&["product"], &[fixture("one.cat")]).status.code(),
        Some(2)
    );
    assert_eq!(catpb(&["frobnicate"], &[]).status.code(), Some(2));
}

#[test]
fn functor_checks() {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        fixture("arrow.cat"),
        fixture("diamond.cat"),
        maps_file(&dir),
    ];
    let out = catpb(
        &["check", "functor", "--preserves-pullbacks", "--name", "F"],
        &files,
    );
    assert_eq!(out.status.code(), Some(0));
    let out = catpb(
        &[
            "check",
            "functor",
            "--preserves-pullbacks",
            "--name",
            "Collapse",
            "--json",
        ],
        &files,
    );
    assert_eq!(out.status.code(), Some(1));
    let ce = &json(&out)["checks"][1]["counterexample"];
    assert_eq!(ce["kind"], "cospan");
    assert_eq!(
        (ce["left"].as_str(), ce["right"].as_str()),
        (Some("a_top"), Some("b_top"))
    );
}

#[test]
fn nattrans_checks() {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        fixture("arrow.cat"),
        fixture("diamond.cat"),
        maps_file(&dir),
    ];
    let out = catpb(&["check", "nattrans", "--cartesian", "--json"], &files);
    // the square bot -> a over b -> top is the meet square, so t is cartesian
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn iso_reports_witness_functors() {
    let out = catpb(
        &["iso", "--json"],
        &[fixture("diamond.cat"), fixture("diamond.cat")],
    );
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 2);
}
