//! Backtracking search for table isomorphisms.
//!
//! Elements may only map to elements with the same invariant profile
//! (idempotency, index/period, principal ideal sizes, Green class sizes).
//! Source elements are assigned in ascending index order and candidate
//! images are tried in ascending index order; product constraints are
//! propagated eagerly, so the first witness found is deterministic.

use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoKind {
    Isomorphism,
    AntiIsomorphism,
}

/// A verified structure-preserving bijection between two element sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    /// `mapping[i]` = image of element `i`.
    pub mapping: Vec<usize>,
    pub kind: IsoKind,
}

pub fn verify_witness(s: &FiniteSemigroup, t: &FiniteSemigroup, witness: &IsoWitness) -> bool {
    let n = s.size();
    if t.size() != n || witness.mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &witness.mapping {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let m = &witness.mapping;
    (0..n).all(|x| {
        (0..n).all(|y| match witness.kind {
            IsoKind::Isomorphism => m[s.mul(x, y)] == t.mul(m[x], m[y]),
            IsoKind::AntiIsomorphism => m[s.mul(x, y)] == t.mul(m[y], m[x]),
        })
    })
}

#[derive(PartialEq, Eq, Debug)]
struct Profile {
    idempotent: bool,
    index: usize,
    period: usize,
    right_ideal: usize,
    left_ideal: usize,
    r_size: usize,
    l_size: usize,
    h_size: usize,
    d_size: usize,
}

fn profiles(s: &FiniteSemigroup) -> Vec<Profile> {
    let green = s.green();
    (0..s.size())
        .map(|a| {
            let (index, period) = s.index_period(a);
            Profile {
                idempotent: s.is_idempotent(a),
                index,
                period,
                right_ideal: s.right_ideal(a).iter().filter(|&&b| b).count(),
                left_ideal: s.left_ideal(a).iter().filter(|&&b| b).count(),
                r_size: green.r_classes[green.r_class_of[a]].len(),
                l_size: green.l_classes[green.l_class_of[a]].len(),
                h_size: green.h_classes[green.h_class_of[a]].len(),
                d_size: green.d_classes[green.d_class_of[a]].len(),
            }
        })
        .collect()
}

struct Search<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    candidates: Vec<Vec<usize>>,
    mapping: Vec<Option<usize>>,
    inverse: Vec<Option<usize>>,
}

impl Search<'_> {
    /// Assigns `phi(x) = v` and propagates every product constraint this
    /// makes checkable, recording assignments in `trail` for undo.
    fn assign(&mut self, x: usize, v: usize, trail: &mut Vec<usize>) -> bool {
        if let Some(existing) = self.mapping[x] {
            return existing == v;
        }
        if self.inverse[v].is_some() || !self.candidates[x].contains(&v) {
            return false;
        }
        self.mapping[x] = Some(v);
        self.inverse[v] = Some(x);
        trail.push(x);

        let assigned: Vec<usize> = (0..self.s.size())
            .filter(|&i| self.mapping[i].is_some())
            .collect();
        for &i in &assigned {
            let fi = self.mapping[i].unwrap();
            for (p, q) in [
                (self.s.mul(i, x), self.t.mul(fi, v)),
                (self.s.mul(x, i), self.t.mul(v, fi)),
            ] {
                match (self.mapping[p], self.inverse[q]) {
                    (Some(fp), _) if fp != q => return false,
                    (Some(_), _) => {}
                    (None, Some(inv)) if inv != p => return false,
                    (None, _) => {
                        if !self.assign(p, q, trail) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &[usize], from: usize) {
        for &x in &trail[from..] {
            let v = self.mapping[x].take().unwrap();
            self.inverse[v] = None;
        }
    }

    fn solve(&mut self, from: usize) -> bool {
        let Some(x) = (from..self.s.size()).find(|&i| self.mapping[i].is_none()) else {
            return true;
        };
        for idx in 0..self.candidates[x].len() {
            let v = self.candidates[x][idx];
            if self.inverse[v].is_some() {
                continue;
            }
            let mut trail = Vec::new();
            if self.assign(x, v, &mut trail) && self.solve(x + 1) {
                return true;
            }
            self.undo(&trail, 0);
        }
        false
    }
}

/// Searches for a multiplication-preserving bijection `S → T` and returns
/// the first witness in the deterministic search order, if any.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<IsoWitness> {
    if s.size() != t.size() {
        return None;
    }
    let sp = profiles(s);
    let tp = profiles(t);
    let candidates: Vec<Vec<usize>> = sp
        .iter()
        .map(|p| (0..t.size()).filter(|&v| tp[v] == *p).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut search = Search {
        s,
        t,
        candidates,
        mapping: vec![None; s.size()],
        inverse: vec![None; t.size()],
    };
    if !search.solve(0) {
        return None;
    }
    let witness = IsoWitness {
        mapping: search.mapping.iter().map(|m| m.unwrap()).collect(),
        kind: IsoKind::Isomorphism,
    };
    debug_assert!(verify_witness(s, t, &witness));
    Some(witness)
}

/// A semigroup is self-dual when it is anti-isomorphic to itself; the
/// witness is an isomorphism onto the opposite table, reinterpreted.
pub fn is_self_dual(s: &FiniteSemigroup) -> Option<IsoWitness> {
    find_isomorphism(s, &s.opposite()).map(|w| {
        let witness = IsoWitness {
            mapping: w.mapping,
            kind: IsoKind::AntiIsomorphism,
        };
        debug_assert!(verify_witness(s, s, &witness));
        witness
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn left_zero_is_not_self_dual() {
        assert!(is_self_dual(&left_zero(2).unwrap()).is_none());
    }

    #[test]
    fn square_rectangular_band_is_self_dual_by_transposition() {
        let s = rectangular_band(2, 2).unwrap();
        let witness = is_self_dual(&s).unwrap();
        assert_eq!(witness.mapping, vec![0, 2, 1, 3]);
        assert_eq!(witness.kind, IsoKind::AntiIsomorphism);
    }

    #[test]
    fn identity_map_on_self() {
        for s in [
            left_zero(3).unwrap(),
            example_table(ExampleTable::NonBand),
            cyclic_group(3).unwrap(),
        ] {
            let witness = find_isomorphism(&s, &s).unwrap();
            assert_eq!(witness.mapping, (0..s.size()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn product_of_zero_semigroups_is_a_rectangular_band() {
        let p = left_zero(2)
            .unwrap()
            .direct_product(&right_zero(2).unwrap());
        let witness = find_isomorphism(&p, &rectangular_band(2, 2).unwrap()).unwrap();
        assert!(verify_witness(
            &p,
            &rectangular_band(2, 2).unwrap(),
            &witness
        ));
    }

    #[test]
    fn size_mismatch_is_a_fast_negative() {
        assert!(find_isomorphism(&left_zero(2).unwrap(), &left_zero(3).unwrap()).is_none());
    }

    #[test]
    fn non_isomorphic_same_size() {
        assert!(find_isomorphism(&left_zero(2).unwrap(), &cyclic_group(2).unwrap()).is_none());
        assert!(find_isomorphism(&left_zero(2).unwrap(), &right_zero(2).unwrap()).is_none());
    }
}
