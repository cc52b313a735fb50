use std::process::{Command, Output};

fn fock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fock")).args(args).output().expect("fock runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn markov_and_fock_values() {
    let o = fock(&["markov", "--frac", "1/3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5\n");
    assert_eq!(stdout(&fock(&["markov", "--frac", "1/3", "--a", "2"])), "102\n");
    let psi = stdout(&fock(&["fock", "--frac", "1/3"]));
    assert!(psi.starts_with("0.90119194364380077"), "{psi}");
    assert!(psi.contains('±'));
}

#[test]
fn exit_codes() {
    assert_eq!(fock(&["--no-such-flag"]).status.code(), Some(64));
    assert_eq!(fock(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(fock(&["--help"]).status.code(), Some(0));
    let o = fock(&["norm", "--class", "0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain"));
    assert_eq!(fock(&["irrational", "--cf", "0;2,3"]).status.code(), Some(2));
    assert_eq!(fock(&["fock", "--frac", "1/400", "--digit-budget", "20"]).status.code(), Some(3));
}

#[test]
fn output_file_and_formats() {
    let dir = std::env::temp_dir().join(format!("fock-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ball.csv");
    let o = fock(&["ball", "--max-q", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().next(), Some("p,q,x,y,err"));
    assert_eq!(csv.lines().count(), 1 + 16);

    let json = stdout(&fock(&["ball", "--max-q", "2", "--format", "json", "--threads", "2"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 16);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_count_does_not_change_output() {
    let a = fock(&["derivative", "--frac", "2/5", "--depth", "5", "--threads", "1"]);
    let b = fock(&["derivative", "--frac", "2/5", "--depth", "5", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("side,depth,approach_p,approach_q,slope,err\nleft,"));
}

#[test]
fn tree_json_lines() {
    let out = stdout(&fock(&["tree", "--depth", "1", "--a", "1"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], r#"{"fraction":"1/3","triple":["3","6","15"],"a":1}"#);
}

#[test]
fn fricke_surface_flags() {
    let o = fock(&["length", "--hole", "--seed-triple", "3,4,8.5"]);
    assert_eq!(o.status.code(), Some(0));
    // c = -19/4 -> 2 arcosh(27/8)
    let l: f64 = stdout(&o).split('±').next().unwrap().parse().unwrap();
    assert!((l - 2.0 * (27.0f64 / 8.0).acosh()).abs() < 1e-12);
    assert_eq!(fock(&["markov", "--frac", "1/3", "--fricke-c", "-1"]).status.code(), Some(64));
}
