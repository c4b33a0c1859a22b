use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}.pbci", env!("CARGO_MANIFEST_DIR"))
}

fn pbci(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pbci"));
    cmd.args(args).env_remove("PBCI_MAX_SIZE").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Chain `e0 < e1 < … < 1` with `x->y = 1` if `x <= y`, else `y`.
fn chain(n: usize) -> String {
    let names: Vec<String> = (0..n - 1).map(|i| format!("e{i}")).chain(["1".to_string()]).collect();
    let mut s = format!("pbci 1\nelements: {}\nunit: 1\narrow:\n", names.join(" "));
    for x in 0..n {
        let row: Vec<&str> = (0..n).map(|y| if x <= y { "1" } else { names[y].as_str() }).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s.push_str("squig: same\n");
    s
}

#[test]
fn check_reports_classification() {
    let o = pbci(&["check", &fixture("proper5")], &[], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("valid: proper pseudo-BCI algebra, 5 elements"), "{out}");
    assert!(out.contains("At(A) = {d, 1}"));
    assert!(out.contains("K(A) = {a, b, c, 1}"));
}

#[test]
fn violations_exit_one_with_witnesses() {
    let text = std::fs::read_to_string(fixture("proper5")).unwrap().replace("\na b c d 1\n", "\nb b c d 1\n");
    let o = pbci(&["check", "-"], &[], Some(&text));
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("1->x = x fails at x=a"), "{out}");
    assert!(out.contains("1~>x = x fails at x=a"), "{out}");
}

#[test]
fn parse_errors_exit_two() {
    let o = pbci(&["check", "-"], &[], Some("pbci 1\nelements: a\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = pbci(&["check", "/nonexistent/file.pbci"], &[], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pbci(&["frobnicate"], &[], None).status.code(), Some(2));
    let o = pbci(&["derivations", &fixture("proper5"), "--kind", "symmetric", "--type", "iii"], &[], None);
    assert_eq!(o.status.code(), Some(2));
    let o = pbci(&["map", &fixture("proper5"), "--map", "a b"], &[], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("c d 1"));
    let o = pbci(&["quotient", &fixture("proper5"), "--by", "X"], &[], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn types_iii_iv_need_pseudo_bck_or_force() {
    let f = fixture("proper5");
    let o = pbci(&["derivations", &f, "--kind", "implicative", "--type", "iii"], &[], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("pseudo-BCK"));
    let o = pbci(&["derivations", &f, "--kind", "implicative", "--type", "iii", "--force"], &[], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("note:"));
    let o = pbci(&["derivations", &fixture("bck5"), "--kind", "implicative", "--type", "iii"], &[], None);
    assert!(stdout(&o).starts_with("implicative-III: 6 map(s)"), "{}", stdout(&o));
}

#[test]
fn caps_and_override() {
    let o = pbci(&["search", "--size", "7"], &[], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("PBCI_MAX_SIZE"));

    let big = chain(11);
    let args = ["derivations", "-", "--kind", "implicative", "--type", "ii", "--regular"];
    let o = pbci(&args, &[], Some(&big));
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    let o = pbci(&args, &[("PBCI_MAX_SIZE", "11")], Some(&big));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("e0 e1 e2 e3 e4 e5 e6 e7 e8 e9 1"));
    let o = pbci(&["check", "-"], &[("PBCI_MAX_SIZE", "bogus")], Some(&chain(3)));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(pbci(&["verify", &fixture("proper5")], &[], None).status.code(), Some(0));
    let o = pbci(&["verify", &fixture("bck5")], &[], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  regular-type-ii-isotone"));
}

#[test]
fn ds_and_quotient() {
    let o = pbci(&["ds", &fixture("proper5")], &[], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{c, 1} closed"));
    let o = pbci(&["quotient", &fixture("proper5"), "--by-file", "-"], &[], Some("c 1"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_output_round_trips_through_check() {
    let o = pbci(&["search", "--size", "4", "--modulo-iso", "--pred", "!bci"], &[], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("pbci 1"));
    let c = pbci(&["check", "-"], &[], Some(&text));
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(stdout(&c).matches("valid:").count(), stderr(&o).split(' ').next().unwrap().parse::<usize>().unwrap());
    let o = pbci(&["search", "--size", "4", "--limit", "3"], &[], None);
    assert_eq!(stdout(&o).matches("pbci 1").count(), 3);
}

#[test]
fn lowering_the_cap_still_validates() {
    let o = pbci(&["check", &fixture("group6")], &[("PBCI_MAX_SIZE", "3")], None);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = pbci(
        &["derivations", &fixture("group6"), "--kind", "symmetric", "--type", "i"],
        &[("PBCI_MAX_SIZE", "3")],
        None,
    );
    assert_eq!(o.status.code(), Some(2));
}
