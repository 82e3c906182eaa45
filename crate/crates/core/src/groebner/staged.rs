use rayon::prelude::*;

use super::{sort_polys, StageRecord};
use crate::poly::sorted::{self, OrderedPoly, Reducers};
use crate::poly::{MonomialOrder, Polynomial};
use crate::scalar::Coefficient;

/// Sorts ascending, then replaces each element by the monic normal form of
/// it with respect to the survivors before it. Zero remainders are dropped.
pub fn self_reduce<F: Coefficient>(polys: &[Polynomial<F>], ord: &MonomialOrder) -> Vec<Polynomial<F>> {
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let vars = first.vars().clone();
    let mut g: Vec<OrderedPoly<F>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| OrderedPoly::from_poly(p, ord).monic())
        .collect();
    sort_polys(&mut g, ord);
    self_reduce_ordered(&g, ord).iter().map(|p| p.to_poly(&vars)).collect()
}

pub(crate) fn self_reduce_ordered<F: Coefficient>(g: &[OrderedPoly<F>], ord: &MonomialOrder) -> Vec<OrderedPoly<F>> {
    let mut kept: Vec<OrderedPoly<F>> = Vec::with_capacity(g.len());
    for f in g {
        let r = Reducers::new(kept.iter()).normal_form(f, ord);
        if !r.is_zero() {
            kept.push(r.monic());
        }
    }
    sort_polys(&mut kept, ord);
    kept
}

pub(crate) fn run<F: Coefficient>(input: Vec<OrderedPoly<F>>, ord: &MonomialOrder) -> (Vec<OrderedPoly<F>>, Vec<StageRecord>) {
    let mut g = input;
    sort_polys(&mut g, ord);
    g.dedup();
    let mut trace = Vec::new();
    if g.is_empty() {
        return (g, trace);
    }
    for stage in 1.. {
        let before = g.len();
        let reduced = self_reduce_ordered(&g, ord);
        let surviving = reduced.len();
        if reduced.len() == 1 && reduced[0].is_one() {
            trace.push(record(stage, before, surviving, 0));
            return (reduced, trace);
        }
        let h = s_round(&reduced, ord);
        trace.push(record(stage, before, surviving, h.len()));
        let stable = h.is_empty() && reduced == g;
        let mut next = reduced;
        next.extend(h);
        sort_polys(&mut next, ord);
        if stable {
            return (next, trace);
        }
        g = next;
    }
    unreachable!()
}

fn record(stage: usize, before: usize, surviving: usize, nonzero: usize) -> StageRecord {
    StageRecord {
        stage,
        elements_before_self_reduce: before,
        eliminated_by_self_reduce: before - surviving,
        surviving_generators: surviving,
        nonzero_s_polynomials: nonzero,
    }
}

/// Distinct monic normal forms of all pairwise S-polynomials.
fn s_round<F: Coefficient>(g: &[OrderedPoly<F>], ord: &MonomialOrder) -> Vec<OrderedPoly<F>> {
    let n = g.len();
    let reducers = Reducers::new(g.iter());
    let mut h: Vec<OrderedPoly<F>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let reducers = &reducers;
            (i + 1..n).filter_map(move |j| {
                let s = sorted::s_polynomial(&g[i], &g[j], ord);
                let r = reducers.normal_form(&s, ord);
                (!r.is_zero()).then(|| r.monic())
            })
        })
        .collect();
    sort_polys(&mut h, ord);
    h.dedup();
    h
}
