use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sharenim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharenim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sharenim_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sharenim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn count_examples() {
    for (args, expected) in [
        (&["count", "pairs", "6", "4"][..], "1\n"),
        (&["count", "zero-nim-sum", "14"], "4\n"),
        (&["count", "zero-nim-upto", "5"], "0\n"),
        (&["count", "zero-nim-upto", "14"], "7\n"),
        (&["count", "absum-exact", "3"], "5\n"),
        (&["count", "absum-upto", "12"], "261625\n"),
        (&["count", "followers", "7", "11", "12"], "7\n"),
        (&["count", "sequence-length", "30"], "13\n"),
    ] {
        let o = sharenim(args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn count_matches_library_exactly() {
    use sharenim::enumeration::zero_nim_count_upto;
    let o = sharenim(&["count", "zero-nim-upto", "1000"]);
    assert_eq!(stdout(&o).trim(), zero_nim_count_upto(1000).unwrap().to_string());
}

#[test]
fn classify_examples() {
    let cases: [(&[&str], &str); 4] = [
        (&["classify", "1", "2", "4", "--rules", "sharing"], "P"),
        (&["classify", "3", "3", "5", "--rules", "sharing"], "N (a-a-b family)"),
        (&["classify", "3", "5", "--rules", "classic"], "N (nim-sum 6)"),
        (&["classify", "1", "2", "3"], "N (a-b-a+b family)"),
    ];
    for (args, prefix) in cases {
        let o = sharenim(args);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).starts_with(prefix), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn default_rules_depend_on_pile_count() {
    // (1,2,3) is P in classic Nim and N in Sharing Nim
    let three = sharenim(&["--format", "structured", "classify", "1", "2", "3"]);
    assert_eq!(
        stdout(&three),
        "command=classify position=1,2,3 rules=sharing outcome=N rule=a-b-a+b\n"
    );
    let classic = sharenim(&[
        "--format",
        "structured",
        "classify",
        "1",
        "2",
        "3",
        "--rules",
        "classic",
    ]);
    assert_eq!(
        stdout(&classic),
        "command=classify position=1,2,3 rules=classic outcome=P rule=nim-sum\n"
    );
    let four = sharenim(&["--format", "structured", "classify", "1", "2", "3", "4"]);
    assert!(stdout(&four).contains("rules=classic"));
}

#[test]
fn advise_examples() {
    assert_eq!(stdout(&sharenim(&["advise", "3", "3", "5"])), "remove 5 from pile 3\n");
    assert_eq!(
        stdout(&sharenim(&["advise", "1", "2", "3"])),
        "transfer 1 from pile 1 to pile 2\n"
    );
    assert_eq!(
        stdout(&sharenim(&["advise", "1", "2", "4"])),
        "P position: no winning move\n"
    );
    assert_eq!(
        stdout(&sharenim(&["advise", "7,11,12"])),
        "P position: no winning move\n"
    );
}

#[test]
fn structured_output_is_stable() {
    let args = ["--format", "structured", "advise", "2", "7", "5"];
    let first = sharenim(&args);
    assert_eq!(
        stdout(&first),
        "command=advise position=2,7,5 rules=sharing outcome=N move=transfer from=1 to=3 count=2\n"
    );
    for _ in 0..3 {
        assert_eq!(sharenim(&args).stdout, first.stdout);
    }
    let verify = ["--format", "structured", "verify", "followers", "30"];
    assert_eq!(sharenim(&verify).stdout, sharenim(&verify).stdout);
}

#[test]
fn verify_exit_codes() {
    let clean = sharenim(&["verify", "pairs", "256"]);
    assert_eq!(code(&clean), 0);
    assert!(stdout(&clean).contains("66049 cases, 0 mismatches, clean"));
    assert!(String::from_utf8_lossy(&clean.stderr).contains("elapsed"));

    let structured = sharenim(&["--format", "structured", "verify", "connectivity", "100"]);
    assert_eq!(code(&structured), 0);
    assert!(stdout(&structured).starts_with("sweep=connectivity bound=100 "));

    // the 1-a-b prediction disagrees with exhaustive search
    assert_eq!(code(&sharenim(&["verify", "nim-inside-nim", "20"])), 3);
    assert_eq!(code(&sharenim(&["verify", "transfer-parity", "6"])), 3);
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["verify", "no-such-sweep", "5"][..],
        &["classify"],
        &["classify", "1", "x"],
        &["classify", "0", "3"],
        &["count", "pairs", "6"],
        &["count", "followers", "1", "2", "4"],
        &["frobnicate"],
        &["--rules", "misere", "classify", "1"],
    ] {
        assert_eq!(code(&sharenim(args)), 1, "{args:?}");
    }
    assert_eq!(code(&sharenim(&["--help"])), 0);
    assert_eq!(code(&sharenim(&["--version"])), 0);
}

#[test]
fn range_errors_exit_2() {
    assert_eq!(code(&sharenim(&["count", "pairs", "9223372036854775808", "0"])), 2);
    assert_eq!(code(&sharenim(&["count", "absum-exact", "100"])), 2);
    assert_eq!(code(&sharenim(&["--budget", "10", "classify", "10", "21", "30"])), 2);
    assert_eq!(code(&sharenim(&["count", "pairs", "9223372036854775807", "1"])), 0);
}

#[test]
fn play_rejects_and_reprompts() {
    let o = sharenim_with_input(
        &["play", "1", "2", "4", "--engine", "second"],
        "move 3 1 2\nremove 4 1\nplease\nremove 1 1\n",
    );
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("illegal move: cannot transfer from a larger pile to a smaller pile"));
    assert!(text.contains("pile 4 does not exist"));
    assert!(text.contains("expected `remove <pile> <count>`"));
    assert!(text.contains("engine: remove 2 from pile 3"));
    assert!(text.ends_with("input closed, game abandoned\n"));
}

#[test]
fn play_engine_first_wins() {
    let o = sharenim_with_input(&["play", "1", "2", "3", "--engine", "first"], "remove 3 3\n");
    let text = stdout(&o);
    assert!(text.contains("engine: transfer 1 from pile 1 to pile 2"));
    assert!(text.ends_with("all piles are empty: the engine wins\n"));
}

#[test]
fn play_classic_rejects_transfers() {
    let o = sharenim_with_input(&["play", "3", "5", "--engine", "second"], "move 1 2 1\n");
    assert!(stdout(&o).contains("illegal move: transfers are not allowed in classic Nim"));
}
