use std::process::{Command, Output};

use double_angle_cli::record::{read_csv, read_jsonl};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_double-angle"))
        .args(args)
        .output()
        .expect("spawn double-angle")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn gen_single_primitive_row() {
    let o = bin(&[
        "gen",
        "--max-perimeter",
        "15",
        "--primitive",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let records = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!((records[0].a, records[0].b, records[0].c), (4, 6, 5));
}

#[test]
fn gen_below_smallest_member_is_header_only() {
    let o = bin(&["gen", "--max-perimeter", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(stdout(&o).starts_with("a,b,c,perimeter"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--max-perimeter", "0"][..],
        &["gen-bisector", "--max-perimeter", "0"],
        &["gen", "--max-perimeter", "10", "--format", "xml"],
        &["oracle", "--max-perimeter", "2"],
        &["oracle", "--max-perimeter", "301", "--naive"],
        &["oracle", "--max-perimeter", "50", "--family", "result3"],
        &["check", "4", "6"],
        &["check", "0", "6", "5"],
        &["frobnicate"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn gen_bisector_records() {
    let o = bin(&["gen-bisector", "--max-perimeter", "45"]);
    assert_eq!(o.status.code(), Some(0));
    let records = read_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(records.len(), 1);
    let rec = &records[0];
    assert_eq!(
        (rec.a, rec.b, rec.c, rec.r, rec.dc),
        (12, 18, 15, Some(10), Some(8))
    );

    let o = bin(&["gen-bisector", "--max-perimeter", "44"]);
    assert!(read_csv(o.stdout.as_slice()).unwrap().is_empty());

    let o = bin(&["gen-bisector", "--max-perimeter", "45", "--primitive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(read_csv(o.stdout.as_slice()).unwrap().is_empty());
    assert!(stderr(&o).contains("no primitive members"));
}

#[test]
fn csv_and_jsonl_carry_the_same_records() {
    for cmd in ["gen", "gen-bisector"] {
        for approx in [false, true] {
            let mut csv_args = vec![cmd, "--max-perimeter", "400", "--format", "csv"];
            let mut json_args = vec![cmd, "--max-perimeter", "400", "--format", "jsonl"];
            if approx {
                csv_args.push("--approx");
                json_args.push("--approx");
            }
            let from_csv = read_csv(bin(&csv_args).stdout.as_slice()).unwrap();
            let from_json = read_jsonl(bin(&json_args).stdout.as_slice()).unwrap();
            assert!(!from_csv.is_empty());
            assert_eq!(from_csv, from_json);
            assert_eq!(from_csv[0].approx_angle_a_deg.is_some(), approx);
        }
    }
}

#[test]
fn check_member_without_integral_bisector() {
    let o = bin(&["check", "4", "6", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("in family: yes"));
    assert!(text.contains("params: l=1 k=2 m=3"));
    assert!(text.contains("angle class: acute"));
    assert!(text.contains("cos A: 3/4"));
    assert!(text.contains("r = |BD| = 10/3"));
    assert!(text.contains("integral bisector: no"));
    assert!(!text.contains("deg"));
}

#[test]
fn check_member_with_integral_bisector() {
    let o = bin(&["check", "12", "18", "15", "--approx"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("integral bisector: yes, r = 10 (d=1 k=2 m=3)"));
    assert!(text.contains("sub-triangle BDC: (8, 12, 10)"));
    assert!(text.contains("41.410 deg, approx"));
}

#[test]
fn check_non_members() {
    let o = bin(&["check", "3", "4", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("in family: no"));
    assert!(stdout(&o).contains("right-at-c"));

    let o = bin(&["check", "1", "2", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("triangle inequality"));
}

#[test]
fn invert_prints_parameters_only() {
    let o = bin(&["invert", "8", "12", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "l=2 k=2 m=3\n");

    let o = bin(&["invert", "3", "4", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn oracle_verifies() {
    for family in ["result1", "result2"] {
        let o = bin(&["oracle", "--max-perimeter", "500", "--family", family]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).starts_with("verified, "));
    }
    let o = bin(&["oracle", "--max-perimeter", "300", "--naive"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bin(&["oracle", "--max-perimeter", "15"]);
    assert!(stdout(&o).starts_with("verified, 1 members"));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = double_angle_cli::run(
        [
            "double-angle",
            "gen",
            "--max-perimeter",
            "300",
            "--format",
            "jsonl",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(
        out,
        bin(&["gen", "--max-perimeter", "300", "--format", "jsonl"]).stdout
    );
}
