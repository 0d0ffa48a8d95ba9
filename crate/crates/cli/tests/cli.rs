use std::path::PathBuf;
use std::process::{Command, Output};

fn examples() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixhom")).current_dir(examples()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Rows of a machine-format table as `(row, value)` for one column.
fn column(out: &str, table: &str, col: &str) -> Vec<(String, String)> {
    out.lines()
        .filter_map(|l| {
            let (k, v) = l.split_once('=')?;
            let rest = k.strip_prefix(&format!("{table}."))?;
            let row = rest.strip_suffix(&format!(".{col}"))?;
            Some((row.to_string(), v.to_string()))
        })
        .collect()
}

fn ranks(out: &str, table: &str) -> Vec<usize> {
    column(out, table, "free_rank").into_iter().map(|(_, v)| v.parse().unwrap()).collect()
}

#[test]
fn dual_numbers_hh() {
    let o = run(&["hh", "dualnumbers.dgc", "--degrees", "0..5", "--weights", "0..6", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ranks(&stdout(&o), "hh"), vec![2, 1, 1, 1, 1, 1]);
}

#[test]
fn kronecker_keller_passes() {
    let o = run(&["keller", "kronecker.dgc", "--cover", "p1", "--ring", "Q", "--degrees", "0..3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("keller: PASS"), "{out}");
    let m = run(&["keller", "kronecker.dgc", "--cover", "p1", "--ring", "Z", "--degrees", "0..3", "--format", "machine"]);
    let out = stdout(&m);
    assert!(out.contains("verdict.keller=PASS"), "{out}");
    let cat: Vec<String> = column(&out, "comparison", "categorical").into_iter().map(|x| x.1).collect();
    assert_eq!(cat, vec!["2", "0", "0", "0"]);
}

#[test]
fn discrete_hp_stabilizes() {
    let o = run(&["hp", "discrete1.dgc", "--degrees", "0..2", "--utrunc", "3", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(ranks(&out, "hp")[0], 1);
    assert!(out.contains("hp.0.stabilized=yes"), "{out}");
}

#[test]
fn shukla_route_matches_koszul() {
    let a = run(&["hh", "z2.dgc", "--degrees", "0..4", "--stages", "6", "--format", "machine"]);
    let b = run(&["hh", "koszul2.dgc", "--degrees", "0..4", "--format", "machine"]);
    assert_eq!(a.status.code(), Some(0));
    let (a, b) = (stdout(&a), stdout(&b));
    assert_eq!(column(&a, "hh", "invariant_factors"), column(&b, "hh", "invariant_factors"));
    assert_eq!(column(&a, "hh", "invariant_factors")[0].1, "2");
}

#[test]
fn flatness_probe_verdicts() {
    let k = stdout(&run(&["probe-flat", "koszul2.dgc", "--modulus", "2", "--degrees", "0..3", "--format", "machine"]));
    assert!(k.contains("verdict.flat=yes"), "{k}");
    let z = stdout(&run(&["probe-flat", "z2.dgc", "--modulus", "2", "--degrees", "0..3", "--format", "machine"]));
    assert!(z.contains("verdict.flat=no"), "{z}");
    assert!(z.contains("H2=0 [2]"), "{z}");
}

#[test]
fn cover_commands() {
    let mv = stdout(&run(&["mv", "--cover", "p1.cover", "--degrees", "-1..2", "--format", "machine"]));
    assert!(mv.contains("verdict.exact=yes"), "{mv}");
    let c = stdout(&run(&["cech", "--cover", "p1", "--ring", "Z", "--degrees", "0..3", "--mode", "hc", "--format", "machine"]));
    assert_eq!(ranks(&c, "total"), vec![2, 0, 2, 0]);
}

#[test]
fn resolve_reports_a_stable_tower() {
    let o = run(&["resolve", "z2.dgc", "--stages", "6", "--degcap", "6", "--weights", "0..0", "--check", "0..4", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verdict.stable=yes") && out.contains("verdict.resolved=yes"), "{out}");
    assert!(out.contains("ledger.a1.witness=2*1_X"), "{out}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let neg = write("neg.dgc", "ring Z\nweights 0..0\nobject X\ngen e : X -> X deg -1 wt 0\n");
    let o = run(&["validate", &neg]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("negative homological degree"));
    let not_complex = write("nc.dgc", "ring Q\nweights 0..0\nobject X\ngen e : X -> X deg 1 wt 0\ngen f : X -> X deg 2 wt 0\nd e = 1_X\nd f = e\n");
    assert_eq!(run(&["hh", &not_complex, "--degrees", "0..2"]).status.code(), Some(1));
    assert_eq!(run(&["hh", "z2.dgc", "--degrees", "0..2"]).status.code(), Some(1));
    assert_eq!(run(&["hh", "missing.dgc", "--degrees", "0..2"]).status.code(), Some(2));
    assert_eq!(run(&["hh", "dualnumbers.dgc", "--degrees", "0..2", "--weights", "0..9"]).status.code(), Some(2));
    assert_eq!(run(&["hh", "dualnumbers.dgc"]).status.code(), Some(2));
    assert_eq!(run(&["validate", "koszul2.dgc"]).status.code(), Some(0));
    let threads = Command::new(env!("CARGO_BIN_EXE_mixhom"))
        .current_dir(examples())
        .env("MIXHOM_THREADS", "zero")
        .args(["validate", "koszul2.dgc"])
        .output()
        .unwrap();
    assert_eq!(threads.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["hh", "dualnumbers.dgc", "--degrees", "0..5", "--weights", "0..6"],
        vec!["keller", "kronecker.dgc", "--cover", "p1", "--ring", "Q", "--degrees", "0..3"],
        vec!["resolve", "z2.dgc", "--stages", "5", "--degcap", "5", "--weights", "0..0"],
    ] {
        let a = run(&args);
        let b = Command::new(env!("CARGO_BIN_EXE_mixhom")).current_dir(examples()).env("MIXHOM_THREADS", "1").args(&args).output().unwrap();
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.is_empty());
    }
}
