use std::process::{Command, Output};

use cuspzeros_cli::eval::EvalRow;
use cuspzeros_cli::output::parse;
use cuspzeros_cli::plotdata::ZeroRow;
use cuspzeros_cli::cuspzeros::zeros::Boundary;
use cuspzeros_cli::Format;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspzeros")).args(args).output().expect("spawn cuspzeros")
}

#[test]
fn eval_e6_at_i() {
    let o = run(&["eval", "--k", "6", "--z", "i"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows: Vec<EvalRow> = parse(&o.stdout, Format::Csv).unwrap();
    assert_eq!(rows.len(), 1);
    // E_6(i) = 0
    assert!(rows[0].e_re.abs() < 1e-12 && rows[0].e_im.abs() < 1e-12, "{:?}", rows[0]);
}

#[test]
fn eval_all_methods_agree() {
    let o = run(&["eval", "--k", "12", "--z", "0.1+1.3i", "--method", "all", "--format", "json"]);
    assert!(o.status.success());
    let rows: Vec<EvalRow> = parse(&o.stdout, Format::Json).unwrap();
    assert!(rows.len() >= 2);
    let r0 = &rows[0];
    for r in &rows[1..] {
        if r.method == "lattice" || r.method == "fourier" {
            assert!((r.e_re - r0.e_re).abs() < 1e-10 && (r.e_im - r0.e_im).abs() < 1e-10);
        }
    }
}

#[test]
fn table3_matches() {
    let o = run(&["table", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[2].starts_with("22,0,1,0,0,1"));
}

#[test]
fn zeros_of_56_20() {
    let o = run(&["plotdata", "zeros", "--k", "56", "--l", "20"]);
    assert!(o.status.success());
    let rows: Vec<ZeroRow> = parse(&o.stdout, Format::Csv).unwrap();
    assert_eq!(rows.iter().filter(|r| r.boundary == Boundary::Arc).count(), 3);
    assert_eq!(rows.iter().filter(|r| r.boundary == Boundary::Side).count(), 2);
    for r in &rows {
        assert!(r.lo <= r.at && r.at <= r.hi);
    }
}

#[test]
fn csv_and_json_agree() {
    let csv = run(&["plotdata", "zeros", "--k", "70", "--l", "22"]);
    let json = run(&["plotdata", "zeros", "--k", "70", "--l", "22", "--format", "json"]);
    let a: Vec<ZeroRow> = parse(&csv.stdout, Format::Csv).unwrap();
    let b: Vec<ZeroRow> = parse(&json.stdout, Format::Json).unwrap();
    assert_eq!(a, b);
}

#[test]
fn output_is_deterministic() {
    let args = ["scan", "--l", "20..22", "--k", "40..44", "--no-interior", "--format", "json", "--jobs", "2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(run(&["audit", "--k", "21", "--l", "20"]).status.code(), Some(2));
    assert_eq!(run(&["--eps", "1e-3", "eval", "--k", "4", "--z", "i"]).status.code(), Some(2));
}
