//! Pair-queue Buchberger with the Gebauer–Möller update and the normal
//! selection strategy (smallest lcm first).

use std::cmp::Ordering;

use crate::poly::sorted::{self, OrderedPoly, Reducers};
use crate::poly::{Monomial, MonomialOrder};
use crate::scalar::Coefficient;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'o, F> {
    ord: &'o MonomialOrder,
    polys: Vec<OrderedPoly<F>>,
    // indices into `polys` forming the current basis
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<F: Coefficient> State<'_, F> {
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lm().clone();
        let cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: h,
                lcm: self.polys[g].lm().lcm(&lh),
            })
            .collect();

        // chain criterion among the new pairs
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            let coprime = self.polys[cands[a].i].lm().coprime(&lh);
            if coprime {
                continue;
            }
            let dominated = cands.iter().enumerate().any(|(b, other)| {
                b != a && keep[b] && other.lcm.divides(&cands[a].lcm) && (other.lcm != cands[a].lcm || b < a)
            });
            if dominated {
                keep[a] = false;
            }
        }
        // product criterion: coprime pairs reduce to zero
        let fresh: Vec<Pair> = cands
            .into_iter()
            .zip(keep)
            .filter(|(p, k)| *k && !self.polys[p.i].lm().coprime(&lh))
            .map(|(p, _)| p)
            .collect();

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lh) != p.lcm
                && polys[p.j].lm().lcm(&lh) != p.lcm)
        });
        self.pairs.extend(fresh);

        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            match ord.compare(&pa.lcm, &pb.lcm) {
                Ordering::Equal => (pa.j, pa.i).cmp(&(pb.j, pb.i)),
                o => o,
            }
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

pub(crate) fn run<F: Coefficient>(input: Vec<OrderedPoly<F>>, ord: &MonomialOrder) -> Vec<OrderedPoly<F>> {
    let mut st = State {
        ord,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in input {
        let r = Reducers::new(st.active.iter().map(|&k| &st.polys[k])).normal_form(&f, ord);
        if r.is_zero() {
            continue;
        }
        if r.is_one() || r.lm().is_one() {
            return vec![r.monic()];
        }
        st.polys.push(r.monic());
        let h = st.polys.len() - 1;
        st.update(h);
    }
    while let Some(p) = st.pop_pair() {
        let s = sorted::s_polynomial(&st.polys[p.i], &st.polys[p.j], ord);
        let r = Reducers::new(st.active.iter().map(|&k| &st.polys[k])).normal_form(&s, ord);
        if r.is_zero() {
            continue;
        }
        if r.lm().is_one() {
            return vec![r.monic()];
        }
        st.polys.push(r.monic());
        let h = st.polys.len() - 1;
        st.update(h);
    }
    st.active.iter().map(|&k| st.polys[k].clone()).collect()
}
