//! End-to-end acceptance run, without the libtest harness so its output is
//! never captured. Each criterion prints one PASS/FAIL line with its elapsed
//! time; the process exits nonzero if any criterion fails or runs over its limit.

use std::time::{Duration, Instant};

use fsgraph::fs::{fs_components, DEFAULT_BUDGET};
use fsgraph::verify::{self, cycles_complement_instance, SweepOptions, SweepReport};
use fsgraph::{make_family, FamilySpec, Graph, Result};

struct Outcome {
    ok: bool,
    detail: String,
}

fn sweep(id: &str, n_max: usize) -> Result<SweepReport> {
    verify::run(id, &SweepOptions { n_max: Some(n_max), ..SweepOptions::default() })
}

fn summary(rep: &SweepReport) -> Outcome {
    let first = rep.counterexamples.first().map(|r| format!(", first: {} {:?}", r.instance, r.note)).unwrap_or_default();
    Outcome {
        ok: rep.passed() && rep.instances > 0,
        detail: format!("{}: {} instances, {} counterexamples{first}", rep.theorem, rep.instances, rep.counterexamples.len()),
    }
}

fn g(spec: &str) -> Graph {
    make_family(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

fn census_exact(x: &str, y: &str, count: usize, total: u64) -> Result<Outcome> {
    let c = fs_components(&g(x), &g(y))?;
    let seen: u64 = c.sizes.iter().sum();
    Ok(Outcome {
        ok: c.count == count && seen == total,
        detail: format!("FS({x}, {y}): {} components over {seen} vertices", c.count),
    })
}

fn criterion_3() -> Result<Outcome> {
    let t = Instant::now();
    let small = sweep("cycles-complement", 8)?;
    let small_time = t.elapsed();
    let mut full = sweep("cycles-complement", 9)?;
    cycles_complement_instance(&mut full, &[6, 2, 1], DEFAULT_BUDGET)?;
    let mut o = summary(&full);
    let n10 = full.records.last().is_some_and(|r| r.oracle == Some(true) && r.ok);
    o.ok &= small.passed() && n10 && small_time < Duration::from_secs(120);
    o.detail += &format!("; n <= 8 subset in {:.1}s; (6,2,1) at n = 10 connected: {n10}", small_time.as_secs_f64());
    Ok(o)
}

fn criterion_5() -> Result<Outcome> {
    let rep = sweep("dandelion", 8)?;
    let mut o = summary(&rep);
    let random = rep.records.iter().filter(|r| r.instance.contains(",8 vs")).count();
    let per_k = random / 3;
    o.ok &= per_k >= 200;
    o.detail += &format!("; {per_k} random Y at n = 8");
    Ok(o)
}

fn criterion_7() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (id, n) in [("spider-sufficient", 8), ("spider-necessary", 7), ("min-degree", 9), ("wilsonian", 7)] {
        let o = summary(&sweep(id, n)?);
        ok &= o.ok;
        parts.push(o.detail);
    }
    Ok(Outcome { ok, detail: parts.join("; ") })
}

fn criterion_10() -> Result<Outcome> {
    let rep = sweep("anchored-walks", 7)?;
    let mut o = summary(&rep);
    o.ok &= rep.instances >= 1000;
    Ok(o)
}

type Check = fn() -> Result<Outcome>;

fn main() {
    let criteria: [(&str, u64, Check); 11] = [
        ("1 FS(Star_7, theta0) has 6 components", 1, || census_exact("star:7", "theta0", 6, 5040)),
        ("2 FS(Spider(2,2,2), co(FruitCycle_7)) has 12 components", 1, || {
            census_exact("spider:2,2,2", "co(fruit:7)", 12, 5040)
        }),
        ("3 spiders vs complement of cycle", 1800, criterion_3),
        ("4 spiders vs complement of fruit cycle", 300, || Ok(summary(&sweep("fruit", 8)?))),
        ("5 dandelion characterization", 900, criterion_5),
        ("6 star dispatcher vs census", 600, || Ok(summary(&sweep("wilson", 7)?))),
        ("7 one-directional theorems", 1200, criterion_7),
        ("8 squares and hexagons span", 1200, || Ok(summary(&sweep("square-span", 8)?))),
        ("9 geodesic, multiplicity and opposite-label properties", 600, || {
            Ok(summary(&sweep("cycle-labels", 6)?))
        }),
        ("10 anchored walk reduction", 600, criterion_10),
        ("11 property suite", 120, || Ok(summary(&sweep("properties", 6)?))),
    ];
    let mut failed = Vec::new();
    for (name, limit, check) in criteria {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        let (ok, detail) = match outcome {
            Ok(o) => (o.ok && secs < limit as f64, o.detail),
            Err(e) => (false, e.to_string()),
        };
        println!("{} criterion {name} ({secs:.2}s, limit {limit}s): {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", 11);
}
