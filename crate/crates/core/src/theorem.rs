//! `κ(G x K2) = min{2κ(G), b(G)}`: the formula, the two separating-set
//! constructions that realise it in the double cover, and a harness that
//! checks the formula against direct computation on the product.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bpair::{b_number, BPair};
use crate::connectivity::{
    kappa_bruteforce_limited, kappa_with_witness, SeparatingSet, KAPPA_BRUTEFORCE_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::product::{double_cover, ProductVertex, Side};

/// `min{2κ(G), b(G)}`.
pub fn formula_value(g: &Graph) -> usize {
    let (k, _) = kappa_with_witness(g);
    let (b, _) = b_number(g, Some(2 * k + 1));
    (2 * k).min(b)
}

/// `S0 x {a, b}` for a separating set `S0` of `G`, in product coordinates.
pub fn kappa_separator(g: &Graph, s0: &SeparatingSet) -> SeparatingSet {
    let mut vertices: Vec<Vertex> = s0
        .vertices
        .iter()
        .flat_map(|&u| [Side::A, Side::B].map(|s| ProductVertex::new(u, s).encode()))
        .collect();
    vertices.sort_unstable();
    SeparatingSet {
        vertices,
        host_size: 2 * g.order(),
    }
}

/// `φ(X) ∪ (Y x {a, b})` where `φ(x) = (x, b)` if `x` has a neighbour in `P`
/// and `(x, a)` otherwise, `(P, Q)` being the bipartition of the b-pair's
/// component. Removing it leaves `(P x {a}) ∪ (Q x {b})` as a component.
///
/// Panics if some `x ∈ X` has no neighbour in the component; canonical
/// b-pairs never contain such a vertex.
pub fn bpair_separator(g: &Graph, pair: &BPair) -> SeparatingSet {
    let bip = pair.component_bipartition(g);
    let in_p = g.mask_of(&bip.part_a);
    let in_q = g.mask_of(&bip.part_b);
    let mut vertices = Vec::with_capacity(pair.value);
    for &x in &pair.x {
        let sees_p = g.neighbors(x).iter().any(|&v| in_p[v]);
        let sees_q = g.neighbors(x).iter().any(|&v| in_q[v]);
        assert!(
            sees_p || sees_q,
            "vertex {x} of X has no neighbour in the component"
        );
        let side = if sees_p { Side::B } else { Side::A };
        vertices.push(ProductVertex::new(x, side).encode());
    }
    for &y in &pair.y {
        vertices.push(ProductVertex::new(y, Side::A).encode());
        vertices.push(ProductVertex::new(y, Side::B).encode());
    }
    vertices.sort_unstable();
    SeparatingSet {
        vertices,
        host_size: 2 * g.order(),
    }
}

/// The component `(P x {a}) ∪ (Q x {b})` that [`bpair_separator`] cuts off.
pub fn bpair_isolated_component(g: &Graph, pair: &BPair) -> Vec<Vertex> {
    let bip = pair.component_bipartition(g);
    let mut out: Vec<Vertex> = bip
        .part_a
        .iter()
        .map(|&p| ProductVertex::new(p, Side::A).encode())
        .chain(
            bip.part_b
                .iter()
                .map(|&q| ProductVertex::new(q, Side::B).encode()),
        )
        .collect();
    out.sort_unstable();
    out
}

fn choose_separator(
    g: &Graph,
    kappa: usize,
    s0: &SeparatingSet,
    b: usize,
    pair: &BPair,
) -> SeparatingSet {
    if 2 * kappa <= b {
        kappa_separator(g, s0)
    } else {
        bpair_separator(g, pair)
    }
}

/// A minimum separating set of `G x K2` with `formula_value(g)` vertices.
/// Ties `2κ(G) = b(G)` use the `S0 x {a, b}` construction.
pub fn witness_product_separator(g: &Graph) -> SeparatingSet {
    let (kappa, s0) = kappa_with_witness(g);
    let (b, pair) = b_number(g, None);
    choose_separator(g, kappa, &s0, b, &pair)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub kappa_g: usize,
    pub b_g: usize,
    pub formula_value: usize,
    pub direct_value: usize,
    pub oracle_value: Option<usize>,
    pub witness: SeparatingSet,
    pub witness_valid: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Computes every report field for `g`. With `with_oracle`, the product's
/// connectivity is also found by exhaustive search, which requires
/// `2 * |g| <= KAPPA_BRUTEFORCE_LIMIT`.
pub fn verify_instance(g: &Graph, graph_id: &str, with_oracle: bool) -> Result<VerificationReport> {
    let oracle_limit = with_oracle.then_some(KAPPA_BRUTEFORCE_LIMIT);
    if with_oracle && 2 * g.order() > KAPPA_BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            n: 2 * g.order(),
            limit: KAPPA_BRUTEFORCE_LIMIT,
        });
    }
    Ok(verify_with_limit(g, graph_id, oracle_limit))
}

/// As [`verify_instance`], running the oracle on the product whenever it has
/// at most `oracle_limit` vertices.
pub fn verify_with_limit(
    g: &Graph,
    graph_id: &str,
    oracle_limit: Option<usize>,
) -> VerificationReport {
    let (kappa_g, s0) = kappa_with_witness(g);
    let (b_g, pair) = b_number(g, None);
    let formula = (2 * kappa_g).min(b_g);

    let cover = double_cover(g);
    let (direct_value, _) = kappa_with_witness(&cover);
    let oracle_value = oracle_limit
        .filter(|&lim| cover.order() <= lim)
        .map(|lim| kappa_bruteforce_limited(&cover, lim).expect("within limit"));

    let witness = choose_separator(g, kappa_g, &s0, b_g, &pair);
    let witness_valid = witness.len() == formula && witness.is_valid_for(&cover);
    let matches = formula == direct_value && oracle_value.is_none_or(|o| o == formula);

    VerificationReport {
        graph_id: graph_id.to_string(),
        n: g.order(),
        m: g.size(),
        kappa_g,
        b_g,
        formula_value: formula,
        direct_value,
        oracle_value,
        witness,
        witness_valid,
        matches,
    }
}

/// `G(n, p)`: every pair `u < v`, in lexicographic order, draws one Bernoulli
/// trial from a ChaCha8 stream seeded with `seed`.
pub fn gnp_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FuzzConfig {
    pub trials: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub p_choices: Vec<f64>,
    pub master_seed: u64,
    /// Largest `|G|` for which the product is also checked by exhaustive search.
    pub oracle_limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub trials: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub invalid_witnesses: usize,
    pub oracle_checked: usize,
    pub bipartite: usize,
    pub nonbipartite: usize,
    pub connected: usize,
    pub disconnected: usize,
    pub failures: Vec<VerificationReport>,
}

impl FuzzSummary {
    pub fn all_passed(&self) -> bool {
        self.mismatches == 0 && self.invalid_witnesses == 0
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed, a pure function of the master seed and the trial index.
pub fn trial_seed(master_seed: u64, index: usize) -> u64 {
    splitmix64(master_seed ^ splitmix64(index as u64))
}

/// The `(n, p, graph seed)` drawn for trial `index`.
pub fn trial_parameters(config: &FuzzConfig, index: usize) -> (usize, f64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(config.master_seed, index));
    let n = rng.random_range(config.n_min..=config.n_max);
    let p = config.p_choices[rng.random_range(0..config.p_choices.len())];
    (n, p, rng.next_u64())
}

/// Runs [`verify_with_limit`] on `config.trials` random graphs. Trials run in
/// parallel; the summary does not depend on the schedule.
pub fn fuzz_campaign(config: &FuzzConfig) -> Result<FuzzSummary> {
    if config.trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if config.n_min == 0 || config.n_min > config.n_max {
        return Err(Error::InvalidParameter(format!(
            "bad vertex range [{}, {}]",
            config.n_min, config.n_max
        )));
    }
    if config.p_choices.is_empty() {
        return Err(Error::InvalidParameter(
            "no edge probabilities given".into(),
        ));
    }
    if let Some(&p) = config.p_choices.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::InvalidProbability(p));
    }

    let results: Vec<(VerificationReport, bool, bool)> = (0..config.trials)
        .into_par_iter()
        .map(|i| {
            let (n, p, seed) = trial_parameters(config, i);
            let g = gnp_random(n, p, seed).expect("validated parameters");
            let label = format!("trial-{i} gnp(n={n}, p={p}, seed={seed})");
            let oracle = (n <= config.oracle_limit).then_some(2 * config.oracle_limit);
            let report = verify_with_limit(&g, &label, oracle);
            (report, g.is_bipartite(), g.is_connected())
        })
        .collect();

    let mut summary = FuzzSummary {
        trials: config.trials,
        matches: 0,
        mismatches: 0,
        invalid_witnesses: 0,
        oracle_checked: 0,
        bipartite: 0,
        nonbipartite: 0,
        connected: 0,
        disconnected: 0,
        failures: Vec::new(),
    };
    for (report, bipartite, connected) in results {
        if report.matches {
            summary.matches += 1;
        } else {
            summary.mismatches += 1;
        }
        if !report.witness_valid {
            summary.invalid_witnesses += 1;
        }
        summary.oracle_checked += usize::from(report.oracle_value.is_some());
        if bipartite {
            summary.bipartite += 1;
        } else {
            summary.nonbipartite += 1;
        }
        if connected {
            summary.connected += 1;
        } else {
            summary.disconnected += 1;
        }
        if !report.matches || !report.witness_valid {
            summary.failures.push(report);
        }
    }
    Ok(summary)
}
