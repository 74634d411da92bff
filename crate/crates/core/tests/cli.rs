use std::process::{Command, Output};

use overpart::cli::StatsReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overpart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn mul() {
    assert_eq!(stdout(&["mul", "<1^2 2^-3 3^1>", "<2^3>"]), "<1^2 3^1>\n");
    assert_eq!(stdout(&["mul", "<>"]), "<>\n");
    assert_eq!(stdout(&["mul", "<1^1>", "<1^-1>"]), "<>\n");
    assert_eq!(stdout(&["mul", "~3,2,2,2,1,1", "<3^1>"]), "<1^2 2^3>\n");
    assert_eq!(
        stdout(&["--output", "json", "mul", "<1^2>", "<2^-1>"]),
        "{\"1\":2,\"2\":-1}\n"
    );
}

#[test]
fn inv() {
    assert_eq!(stdout(&["inv", "<1^2 3^-1>"]), "<1^-2 3^1>\n");
}

#[test]
fn supernorm_and_factor() {
    assert_eq!(stdout(&["supernorm", "<3^2>"]), "25\n");
    assert_eq!(stdout(&["supernorm", "<>"]), "1\n");
    assert_eq!(stdout(&["supernorm", "<1^2 2^-3 3^1>"]), "20/27\n");
    assert_eq!(stdout(&["factor", "20/27"]), "<1^2 2^-3 3^1>\n");
    assert_eq!(stdout(&["factor", "75"]), "<2^1 3^2>\n");
    for literal in ["<1^2 2^-3 3^1>", "<5^-1 9^4>", "<>"] {
        let q = stdout(&["supernorm", literal]);
        assert_eq!(stdout(&["factor", q.trim()]).trim(), literal);
    }
    assert_eq!(run(&["factor", "0"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "-2/3"]).status.code(), Some(2));
}

#[test]
fn stats() {
    let text = stdout(&["stats", "<1^2 2^3 3^-1>"]);
    assert!(text.contains("oversize: 5\n"));
    assert!(text.contains("overlength: 4\n"));
    assert!(text.contains("overnorm: 8/3\n"));

    let json = stdout(&["--output", "json", "stats", "<1^2 2^3 3^-1>"]);
    let report: StatsReport = serde_json::from_str(&json).unwrap();
    assert_eq!((report.oversize, report.overlength), (5, 4));
    assert_eq!(report.overnorm.to_string(), "8/3");
    assert_eq!(serde_json::to_string(&report).unwrap(), json.trim());

    let empty: StatsReport =
        serde_json::from_str(&stdout(&["--output", "json", "stats", "<>"])).unwrap();
    assert_eq!((empty.oversize, empty.overlength, empty.size, empty.length), (0, 0, 0, 0));
    assert_eq!(empty.overnorm.to_string(), "1");
    assert_eq!(empty.supernorm.to_string(), "1");
}

#[test]
fn member_and_quotient() {
    assert_eq!(stdout(&["member", "<1^2 2^-1>", "size-kernel"]), "true\n");
    assert_eq!(stdout(&["quotient", "<5^-4>", "length-mod", "3"]), "2\n");
    for g in [
        vec!["size-kernel"],
        vec!["length-kernel"],
        vec!["parts-in", "1,3"],
        vec!["parts-avoiding", "1,3"],
        vec!["length-mod", "5"],
        vec![r#"{"kind":"length-mod","m":2}"#],
    ] {
        let mut args = vec!["member", "<>"];
        args.extend(g);
        assert_eq!(stdout(&args), "true\n");
    }
    assert_eq!(stdout(&["quotient", "<1^2 2^3 3^-1>", "parts-in", "1,3"]), "<2^3>\n");
    assert_eq!(
        stdout(&["--output", "json", "quotient", "<1^2 2^3 3^-1>", "size-kernel"]),
        "{\"type\":\"integer\",\"value\":5}\n"
    );
    for bad in [
        vec!["member", "<>", "nope"],
        vec!["member", "<>", "parts-in"],
        vec!["member", "<>", "length-mod", "0"],
    ] {
        assert_eq!(run(&bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn verify() {
    let out = stdout(&["verify", "corteel", "10"]);
    let rows: Vec<&str> = out.lines().filter(|l| l.ends_with("MATCH")).collect();
    assert_eq!(rows.len(), 11);
    assert!(!out.contains("MISMATCH"));

    let csv = stdout(&["--output", "csv", "verify", "corteel", "0"]);
    assert_eq!(csv, "n,formula,bruteforce,status\n0,1,1,MATCH\n");

    let pn = stdout(&["--output", "csv", "verify", "pn", "20"]);
    assert_eq!(pn.lines().count(), 22);
    assert!(pn.lines().skip(1).all(|l| l.ends_with(",MATCH")));

    assert!(run(&["verify", "overcount", "12"]).status.success());
    assert!(run(&["--seed", "11", "verify", "axioms", "500"]).status.success());
    assert_eq!(run(&["verify", "corteel", "1000"]).status.code(), Some(2));
}

#[test]
fn lattice() {
    let dot = stdout(&["lattice", "1", "3"]);
    assert!(dot.starts_with("digraph lattice {"));
    assert_eq!(dot.matches("[label=").count(), 4);
    for label in ["<>\\n1\"", "<1^1>\\n2\"", "<2^1>\\n3\"", "<3^1>\\n5\""] {
        assert!(dot.contains(label), "{label}");
    }
    assert_eq!(stdout(&["lattice", "0", "1"]).matches("[label=").count(), 1);
    assert_eq!(stdout(&["lattice", "3", "3"]).matches("[label=").count(), 20);
    assert_eq!(stdout(&["--output", "dot", "lattice", "3"]), stdout(&["lattice", "3", "3"]));
    assert_eq!(run(&["lattice", "60", "60"]).status.code(), Some(2));
}

#[test]
fn enumerate() {
    assert_eq!(
        stdout(&["enumerate", "partitions", "4"]),
        "<4^1>\n<1^1 3^1>\n<2^2>\n<1^2 2^1>\n<1^4>\n"
    );
    assert_eq!(stdout(&["enumerate", "overpartitions", "4"]).lines().count(), 14);
    assert_eq!(
        stdout(&["--output", "csv", "enumerate", "pn", "5"]),
        "n,value\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n"
    );
    assert_eq!(
        stdout(&["--output", "csv", "enumerate", "pentagonal", "6"]),
        "n,value\n1,1\n2,2\n3,5\n4,7\n5,12\n6,15\n"
    );
    assert!(stdout(&["--output", "csv", "enumerate", "corteel", "20"]).ends_with("20,45448\n"));
}

#[test]
fn errors_and_determinism() {
    let out = run(&["mul", "<1^1", "<>"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 4"));
    assert_eq!(run(&["mul"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--output", "csv", "stats", "<>"]).status.code(), Some(2));

    let args = ["--output", "json", "enumerate", "overpartitions", "6"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
