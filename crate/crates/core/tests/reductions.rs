mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use untangle_core::branch::solve_max_branching;
use untangle_core::dp::{solve_max_dp, solve_sum_dp};
use untangle_core::reductions::*;
use untangle_core::{verify_timeline, BudgetSpec, StaticGraph, TemporalGraph, Timeline, Vertex};

fn valid(inst: &Instance, t: &Timeline) -> bool {
    verify_timeline(&inst.graph, t, &inst.budget, inst.objective).unwrap().is_valid()
}

fn random_static(rng: &mut ChaCha8Rng, n: Vertex, p: f64) -> StaticGraph {
    let pairs: Vec<_> =
        (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    StaticGraph::new(n, pairs.into_iter().filter(|_| rng.random_bool(p))).unwrap()
}

fn random_classes(rng: &mut ChaCha8Rng, n: Vertex) -> BudgetSpec {
    let count = rng.random_range(1..=n as usize);
    let mut classes = vec![Vec::new(); count];
    for v in 1..=n {
        classes[if (v as usize) <= count { v as usize - 1 } else { rng.random_range(0..count) }].push(v);
    }
    let budgets = (0..count).map(|_| rng.random_range(0..=2)).collect();
    BudgetSpec::Multicolored { classes, budgets }
}

#[test]
fn oct_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut yes = 0;
    for _ in 0..80 {
        let n = rng.random_range(2..=5);
        let g = random_static(&mut rng, n, 0.7);
        let s = rng.random_range(0..=1);
        let inst = reduce_oct_to_sum(&g, s);
        let source = solve_oct_brute(&g, s);
        let target = solve_sum_dp(&inst.graph, &inst.budget, s).unwrap();
        assert_eq!(source.is_some(), target.is_yes(), "{g:?} s={s}");
        if let Some(x) = source {
            yes += 1;
            assert!(valid(&inst, &oct_to_timeline(&g, &x).unwrap()));
            let back = timeline_to_oct(target.witness().unwrap());
            assert!(back.len() as u32 <= s);
            oct_to_timeline(&g, &back).expect("extracted set is a transversal");
        }
    }
    assert!(yes > 10 && yes < 70, "{yes} yes-instances");
}

#[test]
fn almost2sat_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut yes = 0;
    for i in 0..80 {
        let n = rng.random_range(2..=5);
        let g = generate_random(n, 2, 0.8, 500 + i).unwrap();
        let ell = rng.random_range(0..=1);
        let f = reduce_sum_tau2_to_almost2sat(&g, ell).unwrap();
        let target = solve_sum_dp(&g, &BudgetSpec::Uniform(1), ell).unwrap();
        let source = solve_almost2sat_brute(&f).unwrap();
        assert_eq!(source.is_some(), target.is_yes(), "{g:?} ell={ell}");
        let inst = Instance { graph: g.clone(), budget: BudgetSpec::Uniform(1), objective: untangle_core::Objective::sum(ell) };
        if let Some((deleted, assignment)) = source {
            yes += 1;
            assert!(valid(&inst, &almost2sat_to_timeline(&f, &deleted, &assignment)));
            let (del, asg) = timeline_to_almost2sat(&f, target.witness().unwrap());
            assert!(del.len() as u32 <= ell);
            let violated = f.clauses.iter().enumerate().filter(|(j, c)| {
                !del.contains(j) && !c.iter().any(|l| asg[2 * (l.v as usize - 1) + (l.layer as usize - 1)] == l.positive)
            });
            assert_eq!(violated.count(), 0);
        }
        for k in [0, 2, 3] {
            let direct = solve_sum_dp(&g, &BudgetSpec::Uniform(k), ell).unwrap().is_yes();
            assert_eq!(tau2_trivial_answer(&g, k), Some(direct));
        }
    }
    assert!(yes > 10 && yes < 70, "{yes} yes-instances");
}

fn size_multisets(m: usize, max: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in size_multisets(m - 1, max) {
        for s in rest.last().copied().unwrap_or(1)..=max {
            let mut v = rest.clone();
            v.push(s);
            out.push(v);
        }
    }
    out
}

#[test]
fn bin_packing_round_trip() {
    let (mut yes, mut checked) = (0, 0);
    for beta in 1..=3 {
        for capacity in 2..=4 {
            for m in 1..=beta as usize + 1 {
                for sizes in size_multisets(m, capacity) {
                    let Some(bp) = (BinPackingInstance { sizes, beta, capacity }).normalized() else { continue };
                    if bp.total() > 9 {
                        continue;
                    }
                    checked += 1;
                    let inst = reduce_binpacking_to_multicolored(&bp).unwrap();
                    let source = solve_bin_packing_brute(&bp);
                    let target = solve_max_branching(&inst.graph, &inst.budget, 1).unwrap();
                    assert_eq!(source.is_some(), target.is_yes(), "{bp:?}");
                    let Some(bins) = source else { continue };
                    yes += 1;
                    let t = packing_to_timeline(&bp, &bins).unwrap();
                    assert!(valid(&inst, &t));
                    assert_eq!(timeline_to_packing(&bp, &t).unwrap(), bins);
                    let back = timeline_to_packing(&bp, target.witness().unwrap()).unwrap();
                    let mut load = vec![0; beta as usize];
                    for (i, b) in back.iter().enumerate() {
                        load[*b as usize - 1] += bp.sizes[i];
                    }
                    assert!(load.iter().all(|&l| l <= capacity), "{bp:?} -> {back:?}");
                }
            }
        }
    }
    assert!(checked >= 50 && yes > 10 && yes + 3 < checked, "{yes} of {checked} yes-instances");
}

#[test]
fn bin_packing_four_item_instance() {
    let bp = BinPackingInstance { sizes: vec![2, 3, 1, 3], beta: 3, capacity: 3 };
    let inst = reduce_binpacking_to_multicolored(&bp).unwrap();
    let bins = solve_bin_packing_brute(&bp).unwrap();
    let t = packing_to_timeline(&bp, &bins).unwrap();
    assert!(valid(&inst, &t));
    let target = solve_max_branching(&inst.graph, &inst.budget, 1).unwrap();
    let back = timeline_to_packing(&bp, target.witness().unwrap()).unwrap();
    assert_eq!(back.iter().filter(|&&b| b == back[1]).count(), 1, "the size-3 items sit alone");
}

#[test]
fn multicolored_to_nonuniform_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut yes = 0;
    for i in 0..120 {
        let n = rng.random_range(2..=4);
        let tau = rng.random_range(1..=3);
        let g = generate_random(n, tau, 0.5, 900 + i).unwrap();
        let budget = random_classes(&mut rng, n);
        let inst = reduce_multicolored_to_nonuniform(&g, &budget).unwrap();
        let source = solve_max_branching(&g, &budget, 1).unwrap();
        let target = solve_max_dp(&inst.graph, &inst.budget, 1).unwrap();
        assert_eq!(source.is_yes(), target.is_yes(), "{g:?} {budget:?}");
        let src = Instance { graph: g.clone(), budget: budget.clone(), objective: inst.objective };
        if let Some(t) = source.witness() {
            yes += 1;
            assert!(valid(&inst, &multicolored_to_nonuniform_witness(&g, &budget, t).unwrap()));
            assert!(valid(&src, &nonuniform_to_multicolored_witness(tau, n, target.witness().unwrap())));
        }
    }
    assert!(yes > 20 && yes < 110, "{yes} yes-instances");
}

#[test]
fn nonuniform_to_uniform_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut yes = 0;
    for case in common::small_sweep(120, 16) {
        let g = &case.g;
        let budget = match case.budget {
            BudgetSpec::Uniform(_) => BudgetSpec::NonUniform((0..g.n()).map(|_| rng.random_range(0..=2)).collect()),
            b => b,
        };
        let inst = reduce_nonuniform_to_uniform(g, &budget).unwrap();
        let BudgetSpec::Uniform(k) = inst.budget else { panic!() };
        let source = solve_max_dp(g, &budget, 1).unwrap();
        let target = solve_max_branching(&inst.graph, &inst.budget, 1).unwrap();
        assert_eq!(source.is_yes(), target.is_yes(), "{g:?} {budget:?}");
        let src = Instance { graph: g.clone(), budget: budget.clone(), objective: inst.objective };
        if let Some(t) = source.witness() {
            yes += 1;
            let lifted = nonuniform_to_uniform_witness(g, &budget, t).unwrap();
            assert!(valid(&inst, &lifted));
            let found = target.witness().unwrap();
            for u in [g.n() + 1, g.n() + 2] {
                assert_eq!(lifted.count_for(u), k as usize);
                assert_eq!(found.count_for(u), k as usize);
            }
            assert!(valid(&src, &uniform_to_nonuniform_witness(g.tau(), g.n(), found)));
        }
    }
    assert!(yes > 20 && yes < 110, "{yes} yes-instances");
}

#[test]
fn reductions_reject_bad_input() {
    let g = TemporalGraph::new(2, [[(1, 2)]]).unwrap();
    assert!(reduce_multicolored_to_nonuniform(&g, &BudgetSpec::Uniform(1)).is_err());
    let bad = BudgetSpec::Multicolored { classes: vec![vec![1]], budgets: vec![1] };
    assert!(reduce_multicolored_to_nonuniform(&g, &bad).is_err());
    assert!(reduce_nonuniform_to_uniform(&g, &bad).is_err());
    assert!(reduce_sum_tau2_to_almost2sat(&g, 1).is_err());
}
