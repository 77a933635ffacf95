use std::process::{Command, Output};

fn exotic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exotic")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dpoly_of_the_short_sign() {
    let out = exotic(&["dpoly", "--mu", "1,1", "--nu", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "e1^2 - e2^2\n");
}

#[test]
fn dim_of_the_regular_rank_two_orbit() {
    let out = exotic(&["dim", "--lambda", "2", "--a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "6");
}

#[test]
fn table_suite_lists_ten_cells() {
    let out = exotic(&["verify", "--suite", "table-n2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("table-n2: pass"));
    assert_eq!(text.lines().filter(|l| l.trim_start().starts_with("cell ")).count(), 10);
}

#[test]
fn failing_suite_exits_with_one() {
    let out = exotic(&["verify", "--suite", "dconvention", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["passed"], false);
    assert!(!v[0]["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["dim", "--lambda", "2,3"],
        vec!["dim", "--lambda", "1,1", "--a", "1,0"],
        vec!["verify", "--suite", "nope"],
        vec!["count", "--n", "2", "--q", "4"],
        vec!["count", "--n", "1", "--q", "3"],
        vec!["dpoly", "--bogus"],
        vec!["frobnicate"],
    ] {
        let out = exotic(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn count_json_shape() {
    let out = exotic(&["count", "--n", "1", "--q", "2", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"n\":1,\"q\":2,\"exotic\":4,\"nilpotent\":4,\"ml_bijective\":true}\n");
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["enumerate", "--n", "4", "--format", "json"],
        vec!["verify", "--suite", "charp", "--format", "json"],
        vec!["special", "--lambda", "3,1", "--a", "2,0"],
        vec!["rep", "--lambda", "2,1", "--a", "1", "--format", "json"],
    ] {
        let (a, b) = (exotic(&args), exotic(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn representative_feeds_back_into_invariant() {
    let rep = exotic(&["rep", "--lambda", "3,1", "--a", "2", "--format", "json"]);
    let vector = stdout(&rep);
    let out = exotic(&["invariant", "--vector", vector.trim(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["marked"], serde_json::json!({ "lambda": [3, 1], "a": [2] }));
}

#[test]
fn convert_both_ways() {
    let out = exotic(&["convert", "--lambda", "2", "--a", "1"]);
    assert_eq!(stdout(&out), "((1), (1))\n");
    let out = exotic(&["convert", "--mu", "1", "--nu", "1"]);
    assert_eq!(stdout(&out), "((2), (1))\n");
}

#[test]
fn joseph_from_the_command_line() {
    let out = exotic(&["joseph", "--ambient", "ordinary", "--n", "2", "--span", "2,0;0,2;1,1", "--eqs", "2,2"]);
    assert_eq!(stdout(&out), "2*e1^2 - 2*e2^2\n");
    let out = exotic(&["joseph", "--ambient", "exotic", "--n", "2", "--span", "1,1;1,-1"]);
    assert_eq!(stdout(&out), "e1*e2\n");
}

#[test]
fn enumerate_counts() {
    let out = exotic(&["enumerate", "--n", "3"]);
    assert_eq!(stdout(&out).lines().count(), 10);
    let out = exotic(&["enumerate", "--n", "3", "--what", "bipartitions"]);
    assert_eq!(stdout(&out).lines().count(), 10);
}
