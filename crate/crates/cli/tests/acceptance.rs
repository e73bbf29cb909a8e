//! One line per acceptance criterion, each run through the `jordan-rep`
//! binary with a wall-clock bound. Exits nonzero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use jordan_core::export::{bipoly_from_json, parse_irrep};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_jordan-rep");

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().expect("spawn jordan-rep");
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let code = out.status.code().unwrap_or(-1);
    if code != 0 && code != 1 {
        return (code, format!("{stdout}{}", String::from_utf8_lossy(&out.stderr)));
    }
    (code, stdout)
}

fn expect_pass(args: &[&str]) -> Result<String, String> {
    match cli(args) {
        (0, out) => Ok(format!("{} checks", out.lines().filter(|l| l.starts_with("[PASS]")).count())),
        (code, out) => {
            let first = out.lines().find(|l| l.starts_with("[FAIL]")).unwrap_or("no failing entry printed");
            Err(format!("exit {code}: {first}"))
        }
    }
}

fn singular_vectors() -> Result<String, String> {
    for (lambda, want) in common::golden_singular_vectors() {
        let (code, out) = cli(&["singvec", "--lambda", &lambda.to_string()]);
        if code != 0 {
            return Err(format!("lambda={lambda}: exit {code}"));
        }
        let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let got = v["coefficients"]
            .as_array()
            .ok_or("no coefficients")?
            .iter()
            .map(|c| bipoly_from_json(&c["value"], "value").map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        if got != want {
            return Err(format!("lambda={lambda}: got {got:?}, want {want:?}"));
        }
    }
    Ok("lambda = 0..7 exact".into())
}

fn golden_irrep(basis: &str) -> Result<String, String> {
    let (code, out) = cli(&["irrep", "--j", "7/2", "--basis", basis, "--format", "json"]);
    if code != 0 {
        return Err(format!("exit {code}"));
    }
    let r = parse_irrep(&out).map_err(|e| e.to_string())?;
    let golden = common::golden_matrices();
    for (name, m) in [("X", &r.x), ("Y", &r.y), ("H", &r.h)] {
        if let Some(at) = common::locate_mismatch(m, &golden[&format!("{basis} {name}")]) {
            return Err(format!("{name} {at}"));
        }
    }
    if basis == "diagonal"
        && (r.y.get(0, 7) != &common::parse_entry("99225h^8") || r.x.get(0, 5) != &common::parse_entry("3780h^4")) {
            return Err("spot entries Y(0,7), X(0,5) differ".into());
        }
    Ok("X, Y, H exact (3 x 64 entries)".into())
}

fn hopf() -> Result<String, String> {
    let a = expect_pass(&["verify", "hopf", "--j1", "1/2", "--j2", "1/2"])?;
    let b = expect_pass(&["verify", "hopf", "--j1", "1", "--j2", "1/2"])?;
    Ok(format!("V(1/2)xV(1/2): {a}; V(1)xV(1/2): {b}"))
}

fn series() -> Result<String, String> {
    let mut parts = Vec::new();
    for s in ["e2", "e3", "qe3"] {
        parts.push(format!("{s}: {}", expect_pass(&["verify", s, "--order", "8"])?));
    }
    Ok(parts.join("; "))
}

fn spectrum() -> Result<String, String> {
    let (code, out) = cli(&["spectrum", "--omega", "1", "--grid", "-3:3:0.5", "--out", "csv"]);
    if code != 0 {
        return Err(format!("exit {code}"));
    }
    let mut lines = out.lines();
    if lines.next() != Some("input_pi_plus,class,re_p_plus,im_p_plus,p_minus,p_zero") {
        return Err("unexpected CSV header".into());
    }
    let mut rows = 0;
    for line in lines {
        let mut f = line.split(',');
        let pi: f64 = f.next().and_then(|x| x.parse().ok()).ok_or("bad input column")?;
        let class = f.next().ok_or("missing class")?;
        let want = if pi == -1.0 {
            "singular"
        } else if pi < -1.0 {
            "complex"
        } else {
            "regular"
        };
        if class != want {
            return Err(format!("Pi+={pi}: {class}, expected {want}"));
        }
        rows += 1;
    }
    if rows != 13 {
        return Err(format!("{rows} grid points, expected 13"));
    }
    Ok("Pi+=-1 singular, Pi+<-1 complex, 13 points".into())
}

type Check = fn() -> Result<String, String>;

fn main() {
    let criteria: [(&str, u64, Check); 10] = [
        ("singular-vector table", 1, singular_vectors),
        ("Verma-basis golden matrices, j=7/2", 1, || golden_irrep("verma")),
        ("diagonal-basis golden matrices, j=7/2", 1, || golden_irrep("diagonal")),
        ("closed forms vs recursion, n<=12", 5, || expect_pass(&["verify", "closed-forms", "--n-max", "12"])),
        ("sl(2) relations and Casimir, j<=6, both bases", 30, || expect_pass(&["verify", "sl2", "--j-max", "6"])),
        ("direct Verma action vs recursion, j<=5/2", 10, || expect_pass(&["verify", "direct", "--j-max", "5/2"])),
        ("Hopf structure on small tensor products", 10, hopf),
        ("so(4) relations and coproducts", 60, || expect_pass(&["verify", "so4"])),
        ("series suites e2, e3, qe3 at order 8", 60, series),
        ("momentum singularity scan", 1, spectrum),
    ];
    let mut failed = 0;
    for (i, (name, bound_s, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let bound = Duration::from_secs(*bound_s);
        let (ok, detail) = match result {
            Ok(d) if elapsed <= bound => (true, d),
            Ok(d) => (false, format!("{d}, but exceeded the {bound_s} s bound")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name} ({:.3} s / {bound_s} s): {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
