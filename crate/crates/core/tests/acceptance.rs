//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use k2conn::bpair::b_bruteforce_limited;
use k2conn::cli;
use k2conn::connectivity::{kappa_bruteforce_limited, kappa_with_witness};
use k2conn::named::named_graph;
use k2conn::product::{bipartite_cover_components, is_isomorphism};
use k2conn::theorem::{bpair_isolated_component, bpair_separator, kappa_separator};
use k2conn::*;

use common::{all_graphs, component_count, random_graphs};

const P_CHOICES: [f64; 4] = [0.15, 0.3, 0.5, 0.8];
const A2_SEED: u64 = 20_240_601;
const A3_SEED: u64 = 9_091;
const A5_SEED: u64 = 5_150;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Witness checks shared by A1-A3: the reported separator, plus both
/// constructions taken on their own.
fn check_witnesses(out: &mut Outcome, label: &str, g: &Graph, formula: usize) {
    let cover = double_cover(g);
    let s = witness_product_separator(g);
    out.check(s.len() == formula && s.is_valid_for(&cover), || {
        format!(
            "{label}: witness {:?} invalid (formula {formula})",
            s.vertices
        )
    });
    let (kappa, s0) = kappa_with_witness(g);
    let ks = kappa_separator(g, &s0);
    out.check(ks.len() == 2 * kappa && ks.is_valid_for(&cover), || {
        format!("{label}: S0 x {{a,b}} invalid")
    });
    let (b, pair) = b_number(g, None);
    let bs = bpair_separator(g, &pair);
    let c1 = bpair_isolated_component(g, &pair);
    out.check(
        bs.len() == b
            && bs.is_valid_for(&cover)
            && cover.components_without(&bs.vertices).contains(&c1),
        || format!("{label}: phi(X) u Y x {{a,b}} invalid"),
    );
}

fn a1() -> (Outcome, Outcome) {
    let mut theorem = Outcome::new();
    let mut witness = Outcome::new();
    for n in 1..=5 {
        for g in all_graphs(n) {
            let label = format!("n={n} edges={:?}", g.edges().collect::<Vec<_>>());
            let cover = double_cover(&g);
            let kappa = kappa_bruteforce_limited(&g, 12).unwrap();
            let b = b_bruteforce_limited(&g, 10).unwrap();
            let oracle_formula = (2 * kappa).min(b);
            let product = kappa_bruteforce_limited(&cover, 12).unwrap();
            theorem.check(
                oracle_formula == product && formula_value(&g) == product,
                || format!("{label}: min(2*{kappa}, {b}) vs kappa(product) {product}"),
            );
            check_witnesses(&mut witness, &label, &g, product);
        }
    }
    (theorem, witness)
}

fn a2() -> (Outcome, Outcome) {
    let mut theorem = Outcome::new();
    let mut witness = Outcome::new();
    for (label, g) in random_graphs(500, 2, 12, &P_CHOICES, A2_SEED) {
        let f = formula_value(&g);
        let direct = kappa_with_witness(&double_cover(&g)).0;
        theorem.check(f == direct, || {
            format!("{label}: formula {f} vs direct {direct}")
        });
        check_witnesses(&mut witness, &label, &g, f);
    }
    (theorem, witness)
}

fn a3() -> (Outcome, Outcome) {
    let mut oracle = Outcome::new();
    let mut witness = Outcome::new();
    for (label, g) in random_graphs(200, 1, 9, &P_CHOICES, A3_SEED) {
        let b = b_number(&g, None).0;
        let b_bf = b_bruteforce(&g).unwrap();
        oracle.check(b == b_bf, || {
            format!("{label}: b_number {b} vs brute force {b_bf}")
        });
        let k = kappa_with_witness(&g).0;
        let k_bf = kappa_bruteforce(&g).unwrap();
        oracle.check(k == k_bf, || {
            format!("{label}: kappa {k} vs brute force {k_bf}")
        });
        check_witnesses(&mut witness, &label, &g, formula_value(&g));
    }
    (oracle, witness)
}

fn a5() -> Outcome {
    let mut out = Outcome::new();
    let graphs = random_graphs(200, 2, 10, &P_CHOICES, A5_SEED);
    for (i, (label, g)) in graphs.iter().enumerate() {
        let (b, _) = b_number(g, None);
        if g.is_bipartite() {
            out.check(b == 0, || format!("{label}: bipartite but b = {b}"));
        }
        out.check(b <= g.min_degree(), || format!("{label}: b {b} > delta"));
        for v in 0..g.order() {
            out.check(is_bpair(g, g.neighbors(v), &[]).unwrap().is_some(), || {
                format!("{label}: (N({v}), {{}}) is not a b-pair")
            });
        }
        for u in 0..g.order() {
            let (h, _) = g.remove_vertex(u).unwrap();
            let (bh, wh) = b_number(&h, None);
            out.check(b <= bh + 2, || {
                format!("{label}: b {b} > b(G-{u}) + 2 = {}", bh + 2)
            });
            let back: Vec<usize> = (0..g.order()).filter(|&v| v != u).collect();
            let x: Vec<usize> = wh.x.iter().map(|&i| back[i]).collect();
            let mut y: Vec<usize> = wh.y.iter().map(|&i| back[i]).collect();
            y.push(u);
            out.check(is_bpair(g, &x, &y).unwrap().is_some(), || {
                format!("{label}: lifted b-pair of G-{u} fails")
            });
        }
        // pair with the next graph in the stream and with K2
        let partner = &graphs[(i + 1) % graphs.len()].1;
        for h in [partner, &Graph::complete(2).unwrap()] {
            let predicted = weichsel_connected(g, h).unwrap();
            let actual = component_count(&kronecker_product(g, h)) == 1;
            out.check(predicted == actual, || {
                format!("{label}: connectivity predicted {predicted}, found {actual}")
            });
        }
        if g.is_connected() {
            if let Some(bip) = g.bipartition() {
                let cover = double_cover(g);
                let cc = bipartite_cover_components(g, &bip).unwrap();
                out.check(
                    cover.components().len() == 2
                        && is_isomorphism(&cover, &cc.first, g, &cc.iso_first)
                        && is_isomorphism(&cover, &cc.second, g, &cc.iso_second),
                    || format!("{label}: double cover components"),
                );
            }
        }
    }
    out
}

fn a6() -> Outcome {
    let mut out = Outcome::new();
    // (kappa(G), b(G), kappa(G x K2)), each from exhaustive search first
    let expected = [
        ("c5", (2, 2, 2)),
        ("k3", (2, 2, 2)),
        ("k4", (3, 3, 3)),
        ("petersen", (3, 3, 3)),
        ("k33", (3, 0, 0)),
        ("triangle-pendant", (1, 1, 1)),
    ];
    for (name, want) in expected {
        let g = named_graph(name).unwrap();
        let cover = double_cover(&g);
        let oracle = (
            kappa_bruteforce_limited(&g, 12).unwrap(),
            b_bruteforce_limited(&g, 10).unwrap(),
            kappa_bruteforce_limited(&cover, 20).unwrap(),
        );
        let computed = (
            kappa_with_witness(&g).0,
            b_number(&g, None).0,
            kappa_with_witness(&cover).0,
        );
        out.check(
            oracle == want && computed == want && formula_value(&g) == want.2,
            || format!("{name}: expected {want:?}, oracle {oracle:?}, computed {computed:?}"),
        );
    }
    out
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let (mut stdout, mut stderr) = (Vec::new(), Vec::new());
    let code = cli::run(args.iter().copied(), &mut stdout, &mut stderr);
    (code, stdout)
}

fn a7() -> Outcome {
    let mut out = Outcome::new();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.txt");
    std::fs::write(
        &path,
        k2conn::io::serialize_graph(&named_graph("petersen").unwrap()),
    )
    .unwrap();
    let path = path.to_str().unwrap().to_string();
    let fuzz = [
        "k2conn",
        "fuzz",
        "--trials",
        "60",
        "--nmin",
        "2",
        "--nmax",
        "9",
        "--p",
        "0.3,0.5,0.8",
        "--seed",
        "77",
        "--oracle-limit",
        "5",
    ];
    let verify = ["k2conn", "verify", path.as_str()];
    let mut runs = Vec::new();
    for threads in [1, 4, 1] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        runs.push(pool.install(|| (run_cli(&fuzz), run_cli(&verify))));
    }
    for r in &runs[1..] {
        out.check(r == &runs[0], || "reports differ between runs".into());
    }
    out.check(runs[0].0 .0 == 0 && runs[0].1 .0 == 0, || {
        "nonzero exit status".into()
    });
    out
}

fn report(
    id: &str,
    desc: &str,
    out: &Outcome,
    elapsed: Duration,
    budget: Option<Duration>,
) -> bool {
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let pass = out.failures.is_empty() && in_time && out.checked > 0;
    println!(
        "{id} {} {desc}: {} checks, {} failures, {:.2?}{}",
        if pass { "PASS" } else { "FAIL" },
        out.checked,
        out.failures.len(),
        elapsed,
        if in_time { "" } else { " (over time budget)" }
    );
    for f in out.failures.iter().take(5) {
        println!("    {f}");
    }
    pass
}

fn main() {
    let mut all = true;

    let t = Instant::now();
    let (a1_theorem, a1_witness) = a1();
    let a1_time = t.elapsed();
    all &= report(
        "A1",
        "exhaustive n <= 5, brute-force formula vs brute-force kappa(G x K2)",
        &a1_theorem,
        a1_time,
        Some(Duration::from_secs(300)),
    );

    let t = Instant::now();
    let (a2_theorem, a2_witness) = a2();
    let a2_time = t.elapsed();
    all &= report(
        "A2",
        "500 G(n,p), n in [2,12], formula vs max-flow kappa(G x K2)",
        &a2_theorem,
        a2_time,
        Some(Duration::from_secs(600)),
    );

    let t = Instant::now();
    let (a3_oracle, a3_witness) = a3();
    all &= report(
        "A3",
        "200 graphs n <= 9, b_number == b_bruteforce, kappa == kappa_bruteforce",
        &a3_oracle,
        t.elapsed(),
        None,
    );

    let mut a4 = Outcome::new();
    for w in [a1_witness, a2_witness, a3_witness] {
        a4.checked += w.checked;
        a4.failures.extend(w.failures);
    }
    all &= report(
        "A4",
        "witness separators on all A1-A3 instances, both constructions",
        &a4,
        Duration::ZERO,
        None,
    );

    let t = Instant::now();
    let a5 = a5();
    all &= report(
        "A5",
        "lemma suite on 200 graphs, n in [2,10]",
        &a5,
        t.elapsed(),
        None,
    );

    let t = Instant::now();
    let a6 = a6();
    all &= report("A6", "named-instance regression", &a6, t.elapsed(), None);

    let t = Instant::now();
    let a7 = a7();
    all &= report(
        "A7",
        "fuzz/verify byte-identical across runs and thread counts",
        &a7,
        t.elapsed(),
        None,
    );

    if !all {
        println!("acceptance: FAILED");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}
