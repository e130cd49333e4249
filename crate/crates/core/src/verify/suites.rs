use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{Job, JobError, Outcome, Scale, SoundnessCheck, Suite, VerifyConfig};
use crate::coloring::{
    chromatic_number_within, has_homomorphism, is_k_colorable_within, multichromatic_number_within, Budget,
};
use crate::constructions::{
    categorical_product, extend_rep_edge, extend_rep_isolated, graphs_isomorphic, kneser, kneser_graph,
    kneser_hypergraph, mycielski_representation, mycielskian, product_representation, schrijver,
    schrijver_hypergraph, schrijver_paper_representation, PaperVariant,
};
use crate::gale::{exact_sign_patterns, gale_points, verify_gale};
use crate::graph::Graph;
use crate::signed::property::{BothContain, EitherContains};
use crate::signed::{alt_sigma, certify, salt_sigma, Hypergraph, Kind, LinearOrder, Mode};

/// A named instance builder.
type Named<T> = (&'static str, fn() -> T);

pub(crate) fn jobs(suite: Suite, cfg: &VerifyConfig) -> Vec<Job> {
    match suite {
        Suite::Soundness => soundness(cfg),
        Suite::Schrijver => schrijver_suite(cfg),
        Suite::Mycielski => mycielski_suite(cfg),
        Suite::Hedetniemi => hedetniemi(cfg),
        Suite::StahlChen => stahl_chen(cfg),
        Suite::Gale => gale(cfg),
        Suite::All => [soundness, schrijver_suite, mycielski_suite, hedetniemi, stahl_chen, gale]
            .iter()
            .flat_map(|f| f(cfg))
            .collect(),
    }
}

fn desk(cfg: &VerifyConfig) -> bool {
    cfg.scale == Scale::Desk
}

fn chi(g: &Graph, timeout_ms: Option<u64>) -> Result<usize, JobError> {
    let r = chromatic_number_within(g, &Budget::from_millis(timeout_ms));
    r.exact().ok_or_else(|| {
        JobError::Skip(format!("chromatic number bracketed in [{}, {}] when the time ran out", r.lower, r.upper))
    })
}

/// Exhaustive enumeration where `3^n` is cheap, branch and bound beyond.
fn mode_for(vertices: usize) -> Mode {
    if vertices <= 12 {
        Mode::Exhaustive
    } else {
        Mode::BranchAndBound
    }
}

fn check(representation: impl Into<String>, bound: usize, chi: usize) -> SoundnessCheck {
    SoundnessCheck { representation: representation.into(), bound, chi }
}

// ---------------------------------------------------------------- soundness

fn soundness(cfg: &VerifyConfig) -> Vec<Job> {
    let timeout = cfg.timeout_ms;
    let params: &[(u32, u32)] =
        if desk(cfg) { &[(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)] } else { &[(5, 2), (6, 2)] };
    let mut jobs: Vec<Job> = params
        .iter()
        .map(|&(n, k)| {
            Job::new(
                format!("soundness/kneser/KG({n},{k})"),
                "ALT bound of all k-subsets under the natural order equals n-2k+2 and the exact chromatic number",
                move || {
                    let rep = kneser(n, k)?;
                    let cert = certify(&rep.hypergraph, &LinearOrder::natural(n), Kind::Alt, mode_for(n as usize))?;
                    let chi = chi(&rep.graph, timeout)?;
                    let formula = (n - 2 * k + 2) as usize;
                    Ok(Outcome::new(
                        json!({ "bound": formula, "chi": formula }),
                        json!({ "bound": cert.bound, "chi": chi, "alt": cert.value }),
                        cert.bound == formula && chi == formula,
                    )
                    .with_soundness(vec![check(format!("KG({n},{k}) natural"), cert.bound, chi)]))
                },
            )
        })
        .collect();

    let isolated: Vec<Named<crate::Result<Hypergraph>>> = vec![
        ("SG(5,2)", || schrijver_hypergraph(5, 2)),
        ("{12,23}", || Hypergraph::on_range(3, vec![vec![1, 2], vec![2, 3]])),
        ("KG(6,3)", || kneser_hypergraph(6, 3)),
    ];
    for (name, build) in isolated {
        jobs.push(Job::new(
            format!("soundness/extend-isolated/{name}"),
            "adding the full hyperedge raises alt by at most one and keeps the bound",
            move || {
                let h = build()?;
                let sigma = h.natural_order();
                let (before, _) = alt_sigma(&h, &sigma, Mode::Exhaustive)?;
                let (h1, sigma1) = extend_rep_isolated(&h, &sigma)?;
                let (after, _) = alt_sigma(&h1, &sigma1, Mode::Exhaustive)?;
                let g1 = kneser_graph(&h1).graph;
                let chi1 = chi(&g1, timeout)?;
                let (n, n1) = (h.vertex_count(), h1.vertex_count());
                let ok = after <= before + 1 && n1 - after >= n - before;
                Ok(Outcome::new(
                    json!({ "alt_after_at_most": before + 1, "bound_at_least": n - before }),
                    json!({ "alt_before": before, "alt_after": after, "bound_after": n1 - after }),
                    ok,
                )
                .with_soundness(vec![check(format!("{name} + isolated"), n1 - after, chi1)]))
            },
        ));
    }

    jobs.push(Job::new(
        "soundness/extend-edge/{12,23}",
        "joining the two vertices of KG({12,23}) costs at most 2t alternations",
        move || {
            let h = Hypergraph::on_range(3, vec![vec![1, 2], vec![2, 3]])?;
            edge_extension_outcome(kneser_graph(&h).with_order(h.natural_order()), &[(0, 1)], timeout)
        },
    ));
    jobs.push(Job::new(
        "soundness/extend-edge/chain",
        "two successive edge additions on a three-edge hypergraph",
        move || {
            let h = Hypergraph::on_range(4, vec![vec![1, 2], vec![2, 3], vec![1, 3, 4]])?;
            edge_extension_outcome(kneser_graph(&h).with_order(h.natural_order()), &[(0, 1), (1, 2)], timeout)
        },
    ));
    jobs
}

fn edge_extension_outcome(
    start: crate::constructions::KneserRepresentation,
    additions: &[(usize, usize)],
    timeout: Option<u64>,
) -> Result<Outcome, JobError> {
    let mut rep = start;
    let mut target = rep.graph.clone();
    let mut steps = Vec::new();
    let mut checks = Vec::new();
    let mut ok = true;
    for &(a, b) in additions {
        let order = rep.order.clone().expect("order attached");
        let (before, _) = alt_sigma(&rep.hypergraph, &order, Mode::Exhaustive)?;
        let ext = extend_rep_edge(&rep, a, b)?;
        let (after, _) = alt_sigma(&ext.hypergraph, &ext.order, Mode::BranchAndBound)?;
        target.add_edge(a, b)?;
        let represented = kneser_graph(&ext.hypergraph).graph;
        let iso = graphs_isomorphic(&represented, &target)?.is_some();
        ok &= iso && after <= before + 2 * ext.steps;
        let chi = chi(&target, timeout)?;
        checks.push(check(format!("after adding {a}-{b}"), ext.hypergraph.vertex_count() - after, chi));
        steps.push(json!({ "edge": [a, b], "t": ext.steps, "alt_before": before, "alt_after": after, "isomorphic": iso }));
        rep = ext.representation;
    }
    Ok(Outcome::new(json!({ "alt_after_at_most": "alt_before + 2t", "isomorphic": true }), json!(steps), ok)
        .with_soundness(checks))
}

// ---------------------------------------------------------------- schrijver

fn schrijver_suite(cfg: &VerifyConfig) -> Vec<Job> {
    let timeout = cfg.timeout_ms;
    let salt_params: &[(u32, u32)] =
        if desk(cfg) { &[(5, 2), (6, 2), (7, 2), (8, 3), (9, 3)] } else { &[(5, 2), (6, 2)] };
    let mut jobs: Vec<Job> = salt_params
        .iter()
        .map(|&(n, k)| {
            Job::new(
                format!("schrijver/salt-identity/SG({n},{k})"),
                "salt under the identity order of the 2-stable k-subsets is 2k-1",
                move || {
                    let h = schrijver_hypergraph(n, k)?;
                    let cert = certify(&h, &LinearOrder::natural(n), Kind::Salt, Mode::Exhaustive)?;
                    let chi = chi(&kneser_graph(&h).graph, timeout)?;
                    Ok(Outcome::new(
                        json!({ "salt": 2 * k - 1 }),
                        json!({ "salt": cert.value, "witness": cert.witness }),
                        cert.value == (2 * k - 1) as usize,
                    )
                    .with_soundness(vec![check(format!("SG({n},{k}) natural, strong"), cert.bound, chi)]))
                },
            )
        })
        .collect();

    let reps: &[(u32, PaperVariant)] = if desk(cfg) {
        &[
            (6, PaperVariant::TwoSubsetsEven),
            (8, PaperVariant::TwoSubsetsEven),
            (5, PaperVariant::TwoSubsetsOdd),
            (7, PaperVariant::TwoSubsetsOdd),
            (5, PaperVariant::HalfKneser),
            (7, PaperVariant::HalfKneser),
        ]
    } else {
        &[(6, PaperVariant::TwoSubsetsEven), (5, PaperVariant::HalfKneser)]
    };
    for &(n, variant) in reps {
        let (tag, k) = match variant {
            PaperVariant::TwoSubsetsEven => ("even", 2),
            PaperVariant::TwoSubsetsOdd => ("odd", 2),
            PaperVariant::HalfKneser => ("half", n / 2),
        };
        jobs.push(Job::new(
            format!("schrijver/padded-order/{tag}-SG({n},{k})"),
            "interleaved ordering with isolated vertices certifies chi(SG(n,k)) = n-2k+2",
            move || {
                let (h, sigma) = schrijver_paper_representation(n, variant)?;
                let cert = certify(&h, &sigma, Kind::Alt, mode_for(h.vertex_count()))?;
                let chi = chi(&schrijver(n, k)?.graph, timeout)?;
                let want = (n - 2 * k + 2) as usize;
                Ok(Outcome::new(
                    json!({ "bound": want, "chi": want }),
                    json!({ "bound": cert.bound, "alt": cert.value, "chi": chi, "method": cert.method }),
                    cert.bound == want && chi == want,
                )
                .with_soundness(vec![check(format!("{tag} padded SG({n},{k})"), cert.bound, chi)]))
            },
        ));
    }
    jobs
}

// ---------------------------------------------------------------- mycielski

fn mycielski_suite(cfg: &VerifyConfig) -> Vec<Job> {
    let timeout = cfg.timeout_ms;
    let mut graphs: Vec<Named<Graph>> = vec![("K2", || Graph::complete(2)), ("C5", || Graph::cycle(5))];
    if desk(cfg) {
        graphs.push(("Petersen", || kneser(5, 2).expect("valid parameters").graph));
        graphs.push(("Grotzsch", || mycielskian(&Graph::cycle(5))));
    }
    let mut jobs: Vec<Job> = graphs
        .into_iter()
        .map(|(name, build)| {
            Job::new(format!("mycielski/chi/M({name})"), "the Mycielskian raises chi by one", move || {
                let g = build();
                let base = chi(&g, timeout)?;
                let lifted = chi(&mycielskian(&g), timeout)?;
                Ok(Outcome::new(json!({ "chi": base + 1 }), json!({ "chi": lifted, "chi_base": base }), lifted == base + 1))
            })
        })
        .collect();

    let mut reps: Vec<(&str, u32, usize)> = vec![("K1", 1, 1)];
    if desk(cfg) {
        reps.push(("K2", 2, 2));
    }
    for (name, singletons, t) in reps {
        jobs.push(Job::new(
            format!("mycielski/representation/{name}-t{t}"),
            "representation of a blow-up of M(KG(f)) with alt at most alt(f) + 2m(2t+1) - 1",
            move || {
                let f = Hypergraph::on_range(singletons, (1..=singletons).map(|v| vec![v]).collect())?;
                let sigma = f.natural_order();
                let rep = mycielski_representation(&f, &sigma, t)?;
                rep.verify()?;
                let represented = kneser_graph(&rep.hypergraph).graph;
                let iso = graphs_isomorphic(&represented, &rep.target.graph)?.is_some();
                let myc = mycielskian(&kneser_graph(&f).graph);
                let equivalent = has_homomorphism(&rep.target.graph, &myc)?.is_some()
                    && has_homomorphism(&myc, &rep.target.graph)?.is_some();
                let (alt_f, _) = alt_sigma(&f, &sigma, Mode::Exhaustive)?;
                let (alt_pi, _) = alt_sigma(&rep.hypergraph, &rep.order, Mode::BranchAndBound)?;
                let ceiling = rep.alt_ceiling(alt_f);
                let bound = rep.hypergraph.vertex_count() - alt_pi;
                let base_bound = f.vertex_count() - alt_f;
                let chi = chi(&rep.target.graph, timeout)?;
                Ok(Outcome::new(
                    json!({ "isomorphic": true, "homomorphically_equivalent": true, "alt_pi_at_most": ceiling, "bound_at_least": base_bound + 1 }),
                    json!({ "isomorphic": iso, "homomorphically_equivalent": equivalent, "alt_pi": alt_pi, "bound": bound, "vertices": rep.hypergraph.vertex_count() }),
                    iso && equivalent && alt_pi <= ceiling && bound > base_bound,
                )
                .with_soundness(vec![check(format!("Mycielski representation of KG({name})"), bound, chi)]))
            },
        ));
    }
    jobs
}

// ---------------------------------------------------------------- hedetniemi

fn hedetniemi(cfg: &VerifyConfig) -> Vec<Job> {
    let timeout = cfg.timeout_ms;
    type Factor = (&'static str, fn() -> crate::Result<(Graph, Option<Hypergraph>)>);
    let sg52: Factor = ("SG(5,2)", || schrijver(5, 2).map(|r| (r.graph, Some(r.hypergraph))));
    let sg62: Factor = ("SG(6,2)", || schrijver(6, 2).map(|r| (r.graph, Some(r.hypergraph))));
    let sg73: Factor = ("SG(7,3)", || schrijver(7, 3).map(|r| (r.graph, Some(r.hypergraph))));
    let msg73: Factor = ("M(SG(7,3))", || schrijver(7, 3).map(|r| (mycielskian(&r.graph), None)));
    let mut pairs = vec![(sg52, sg62)];
    if desk(cfg) {
        pairs.push((sg62, sg73));
        pairs.push((sg62, msg73));
    }
    let mut jobs: Vec<Job> = pairs
        .into_iter()
        .map(|((gname, gb), (hname, hb))| {
            Job::new(
                format!("hedetniemi/chi/{gname}x{hname}"),
                "chi of the categorical product equals the smaller factor chi",
                move || {
                    let (g, hg) = gb()?;
                    let (h, hh) = hb()?;
                    let (cg, ch) = (chi(&g, timeout)?, chi(&h, timeout)?);
                    let p = categorical_product(&g, &h);
                    let cp = chi(&p, timeout)?;
                    // projection onto the factor with fewer colours
                    let witness = if cg <= ch {
                        let c = is_k_colorable_within(&g, cg, &Budget::unlimited()).into_option().expect("chi colouring");
                        c.project_onto_product(h.n())
                    } else {
                        let c = is_k_colorable_within(&h, ch, &Budget::unlimited()).into_option().expect("chi colouring");
                        let assignment = (0..p.n()).map(|v| c.assignment[v % h.n()]).collect();
                        crate::coloring::Coloring { k: ch, assignment }
                    };
                    let projection_ok = witness.check(&p).is_ok();
                    let mut checks = Vec::new();
                    if let (Some(a), Some(b)) = (hg, hh) {
                        let rep = product_representation(&a, &b)?;
                        let pi = rep.order(&a.natural_order(), &b.natural_order())?;
                        let mode = mode_for(rep.hypergraph.vertex_count());
                        let strong = certify(&rep.hypergraph, &pi, Kind::Salt, mode)?;
                        let plain = certify(&rep.hypergraph, &pi, Kind::Alt, mode)?;
                        checks.push(check(format!("{gname}x{hname} product, strong"), strong.bound, cp));
                        checks.push(check(format!("{gname}x{hname} product"), plain.bound, cp));
                    }
                    Ok(Outcome::new(
                        json!({ "chi": cg.min(ch) }),
                        json!({ "chi": cp, "chi_factors": [cg, ch], "projection_colouring_proper": projection_ok }),
                        cp == cg.min(ch) && projection_ok,
                    )
                    .with_soundness(checks))
                },
            )
        })
        .collect();

    let count = if desk(cfg) { 200 } else { 20 };
    let seed = cfg.seed;
    jobs.push(Job::new(
        "hedetniemi/product-inequalities",
        "salt and alt of the union hypergraph under sigma||tau obey the product inequalities",
        move || product_inequalities(seed, count, timeout),
    ));
    jobs
}

fn random_hypergraph(rng: &mut ChaCha8Rng) -> crate::Result<Hypergraph> {
    let n: u32 = rng.random_range(1..=6);
    let room = (1u32 << n) - 1;
    let want = rng.random_range(1..=room.min(6));
    let mut masks: Vec<u32> = Vec::new();
    while masks.len() < want as usize {
        let m = rng.random_range(1..=room);
        if !masks.contains(&m) {
            masks.push(m);
        }
    }
    let edges = masks.iter().map(|m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect()).collect();
    Hypergraph::on_range(n, edges)
}

fn shuffled(h: &Hypergraph, rng: &mut ChaCha8Rng) -> crate::Result<LinearOrder> {
    let mut v = h.vertices().to_vec();
    v.shuffle(rng);
    LinearOrder::new(v)
}

fn product_inequalities(seed: u64, count: usize, timeout: Option<u64>) -> Result<Outcome, JobError> {
    let mut violations = Vec::new();
    let mut conditional = 0;
    let mut checks = Vec::new();
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let g = random_hypergraph(&mut rng)?;
        let h = random_hypergraph(&mut rng)?;
        let sigma = shuffled(&g, &mut rng)?;
        let tau = shuffled(&h, &mut rng)?;
        let rep = product_representation(&g, &h)?;
        let pi = rep.order(&sigma, &tau)?;
        let (n, m) = (g.vertex_count(), h.vertex_count());
        let value = |hg: &Hypergraph, o: &LinearOrder, kind| -> crate::Result<usize> {
            Ok(match kind {
                Kind::Alt => alt_sigma(hg, o, Mode::BranchAndBound)?.0,
                Kind::Salt => salt_sigma(hg, o, Mode::BranchAndBound)?.0,
            })
        };
        let (alt_g, salt_g) = (value(&g, &sigma, Kind::Alt)?, value(&g, &sigma, Kind::Salt)?);
        let (alt_h, salt_h) = (value(&h, &tau, Kind::Alt)?, value(&h, &tau, Kind::Salt)?);
        let (alt_l, salt_l) = (value(&rep.hypergraph, &pi, Kind::Alt)?, value(&rep.hypergraph, &pi, Kind::Salt)?);

        let a = (m + salt_g).max(n + salt_h);
        let b1 = (n + salt_h).max(m + alt_g);
        let b2 = (m + salt_g).max(n + alt_h);
        let c = (n + alt_h).max(m + alt_g);
        let mut broken = Vec::new();
        if salt_l > a {
            broken.push("strong");
        }
        if alt_l > b1 || alt_l > b2 {
            broken.push("mixed");
        }
        if c >= salt_g + salt_h {
            conditional += 1;
            if alt_l > c {
                broken.push("conditional");
            }
        }
        if !broken.is_empty() {
            violations.push(json!({
                "pair": i, "g": g, "h": h, "sigma": sigma, "tau": tau, "broken": broken,
                "alt_l": alt_l, "salt_l": salt_l, "alt_g": alt_g, "salt_g": salt_g, "alt_h": alt_h, "salt_h": salt_h,
            }));
        }
        let chi = chi(&rep.graph, timeout)?;
        let total = n + m;
        checks.push(check(format!("pair {i:03}, strong"), total + 1 - salt_l, chi));
        checks.push(check(format!("pair {i:03}"), total - alt_l, chi));
    }
    Ok(Outcome::new(
        json!({ "pairs": count, "violations": 0 }),
        json!({ "pairs": count, "conditional_applicable": conditional, "violations": violations.len(), "violating": violations }),
        violations.is_empty(),
    )
    .with_soundness(checks))
}

// ---------------------------------------------------------------- stahl-chen

fn stahl_chen(cfg: &VerifyConfig) -> Vec<Job> {
    let timeout = cfg.timeout_ms;
    // (n, k, stability s, fold m); s = 1 is the plain Kneser graph
    let mut cases: Vec<(u32, u32, u32, usize)> = vec![(5, 2, 1, 2), (6, 2, 2, 1)];
    if desk(cfg) {
        cases.push((5, 2, 1, 3));
        cases.push((6, 2, 2, 2));
    }
    cases
        .into_iter()
        .map(|(n, k, s, m)| {
            let name = if s == 1 { format!("KG({n},{k})") } else { format!("SG({n},{k})") };
            Job::new(format!("stahl-chen/{name}/m{m}"), "exact m-fold chromatic number against the closed formula", move || {
                let (g, formula) = if s == 1 {
                    // ceil(m/k)(n-2k) + 2m
                    (kneser(n, k)?.graph, m.div_ceil(k as usize) * (n - 2 * k) as usize + 2 * m)
                } else {
                    // n - sk + sm, s even and k >= m
                    (schrijver(n, k)?.graph, (n - s * k) as usize + s as usize * m)
                };
                let r = multichromatic_number_within(&g, m, &Budget::from_millis(timeout))?;
                let Some(value) = r.exact() else {
                    return Err(JobError::Skip(format!("bracketed in [{}, {}]", r.lower, r.upper)));
                };
                r.witness.check(&g)?;
                Ok(Outcome::new(json!({ "chi_m": formula }), json!({ "chi_m": value, "witness": r.witness.assignment }), value == formula))
            })
        })
        .collect()
}

// ---------------------------------------------------------------- gale

fn gale(cfg: &VerifyConfig) -> Vec<Job> {
    let seed = cfg.seed;
    let trials = cfg.gale_trials.unwrap_or(if desk(cfg) { 100_000 } else { 10_000 });
    let params: &[(u32, u32)] = if desk(cfg) { &[(5, 2), (6, 2), (7, 3)] } else { &[(5, 2), (6, 2)] };
    let mut jobs = Vec::new();
    for &(n, k) in params {
        jobs.push(Job::new(
            format!("gale/both-sides/SG({n},{k})"),
            "every sampled hemisphere and its antipode contain a 2-stable k-subset at m = n - salt - 1",
            move || {
                let h = schrijver_hypergraph(n, k)?;
                let sigma = LinearOrder::natural(n);
                let (salt, _) = salt_sigma(&h, &sigma, Mode::Exhaustive)?;
                let m = n as usize - salt - 1;
                let z = gale_points(n as usize, m, &sigma)?;
                let r = verify_gale(&z, &BothContain::new(&h)?, trials, seed)?;
                Ok(Outcome::new(
                    json!({ "m": n - 2 * k, "failures": 0, "resamples_below": 10, "pattern_violations": 0 }),
                    json!({ "m": m, "trials": r.trials, "failures": r.failure_count, "resamples": r.resamples, "pattern_violations": r.pattern_violations }),
                    m == (n - 2 * k) as usize && r.failure_count == 0 && r.resamples < 10 && r.pattern_violations == 0,
                ))
            },
        ));
        jobs.push(Job::new(
            format!("gale/exact-sign-patterns/n{n}-m{}", n - 2 * k),
            "integer hyperplanes cross the moment curve at most m times",
            move || {
                let m = (n - 2 * k) as usize;
                let r = exact_sign_patterns(n as usize, m, 1000, seed)?;
                Ok(Outcome::new(
                    json!({ "violations": 0, "max_sign_changes_at_most": m }),
                    json!({ "hyperplanes": r.hyperplanes, "violations": r.violations, "max_sign_changes": r.max_sign_changes }),
                    r.violations == 0 && r.max_sign_changes <= m,
                ))
            },
        ));
    }
    let controls: &[(u32, u32)] = if desk(cfg) { &[(5, 2), (7, 3)] } else { &[(5, 2)] };
    for &(n, k) in controls {
        jobs.push(Job::new(
            format!("gale/negative-control/SG({n},{k})"),
            "one dimension more than the bound lets some hemisphere miss the property",
            move || {
                let h = schrijver_hypergraph(n, k)?;
                let sigma = LinearOrder::natural(n);
                let m = (n - 2 * k + 1) as usize;
                let z = gale_points(n as usize, m, &sigma)?;
                let r = verify_gale(&z, &BothContain::new(&h)?, 10_000, seed)?;
                Ok(Outcome::new(
                    json!({ "failures_at_least": 1 }),
                    json!({ "m": m, "trials": r.trials, "failures": r.failure_count }),
                    r.failure_count > 0,
                ))
            },
        ));
    }
    jobs.push(Job::new(
        "gale/either-side/KG(5,2)",
        "every sampled hemisphere or its antipode contains a 2-subset at m = n - alt - 1",
        move || {
            let h = kneser_hypergraph(5, 2)?;
            let sigma = LinearOrder::natural(5);
            let (alt, _) = alt_sigma(&h, &sigma, Mode::Exhaustive)?;
            let m = 5 - alt - 1;
            let z = gale_points(5, m, &sigma)?;
            let r = verify_gale(&z, &EitherContains::new(&h)?, trials, seed)?;
            Ok(Outcome::new(
                json!({ "m": 2, "failures": 0 }),
                json!({ "m": m, "trials": r.trials, "failures": r.failure_count, "resamples": r.resamples }),
                m == 2 && r.failure_count == 0,
            ))
        },
    ));
    jobs
}
