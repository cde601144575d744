//! Green's relations computed from principal ideals.
//!
//! Ideals are taken in `S¹` by adjoining the element itself (`aS ∪ {a}`),
//! so no explicit identity element is ever added to the table. At the sizes
//! this library targets, direct set comparison beats anything cleverer.

use crate::semigroup::FiniteSemigroup;

/// The R/L/H/D partitions of a finite semigroup, the order on D-classes and
/// the set of regular elements.
///
/// Classes are listed with elements ascending and ordered by their smallest
/// element, so all output derived from this structure is deterministic.
#[derive(Debug, Clone)]
pub struct GreenStructure {
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
    pub r_class_of: Vec<usize>,
    pub l_class_of: Vec<usize>,
    pub h_class_of: Vec<usize>,
    pub d_class_of: Vec<usize>,
    /// `regular[a]` iff there is `x` with `axa = a`.
    pub regular: Vec<bool>,
    d_leq: Vec<Vec<bool>>,
}

impl GreenStructure {
    /// Is D-class `lower` below or equal to D-class `upper` in the J-order
    /// (which coincides with the D-order on finite semigroups)?
    pub fn d_leq(&self, lower: usize, upper: usize) -> bool {
        self.d_leq[lower][upper]
    }

    /// D-class indices in a topological order, maximal classes first; ties
    /// broken by smallest contained element.
    pub fn d_topological(&self) -> Vec<usize> {
        let k = self.d_classes.len();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            // A class is ready when every strictly-greater class is placed.
            let next = (0..k)
                .find(|&c| {
                    !placed[c]
                        && (0..k).all(|above| {
                            above == c
                                || placed[above]
                                || !(self.d_leq[c][above] && !self.d_leq[above][c])
                        })
                })
                .expect("the J-order on D-classes is acyclic");
            placed[next] = true;
            order.push(next);
        }
        order
    }
}

fn partition_by_key(keys: &[Vec<bool>]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<&Vec<bool>> = Vec::new();
    let mut class_of = vec![usize::MAX; keys.len()];
    for (elem, key) in keys.iter().enumerate() {
        match reps.iter().position(|r| *r == key) {
            Some(c) => {
                class_of[elem] = c;
                classes[c].push(elem);
            }
            None => {
                class_of[elem] = classes.len();
                reps.push(key);
                classes.push(vec![elem]);
            }
        }
    }
    (classes, class_of)
}

fn group_pairs(pair_of: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut class_of = vec![usize::MAX; pair_of.len()];
    for (elem, pair) in pair_of.iter().enumerate() {
        match reps.iter().position(|r| r == pair) {
            Some(c) => {
                class_of[elem] = c;
                classes[c].push(elem);
            }
            None => {
                class_of[elem] = classes.len();
                reps.push(*pair);
                classes.push(vec![elem]);
            }
        }
    }
    (classes, class_of)
}

impl FiniteSemigroup {
    /// Principal right ideal `aS¹ = {a} ∪ aS` as a membership vector.
    pub fn right_ideal(&self, a: usize) -> Vec<bool> {
        let mut ideal = vec![false; self.size()];
        ideal[a] = true;
        for s in 0..self.size() {
            ideal[self.mul(a, s)] = true;
        }
        ideal
    }

    /// Principal left ideal `S¹a = {a} ∪ Sa`.
    pub fn left_ideal(&self, a: usize) -> Vec<bool> {
        let mut ideal = vec![false; self.size()];
        ideal[a] = true;
        for s in 0..self.size() {
            ideal[self.mul(s, a)] = true;
        }
        ideal
    }

    /// Principal two-sided ideal `S¹aS¹`.
    fn two_sided_ideal(&self, a: usize) -> Vec<bool> {
        let n = self.size();
        let mut ideal = vec![false; n];
        ideal[a] = true;
        for s in 0..n {
            ideal[self.mul(a, s)] = true;
            ideal[self.mul(s, a)] = true;
        }
        for s in 0..n {
            for t in 0..n {
                ideal[self.mul(self.mul(s, a), t)] = true;
            }
        }
        ideal
    }

    /// Computes all Green's relations, the D-class order and regularity.
    pub fn green(&self) -> GreenStructure {
        let n = self.size();
        let right_ideals: Vec<Vec<bool>> = (0..n).map(|a| self.right_ideal(a)).collect();
        let left_ideals: Vec<Vec<bool>> = (0..n).map(|a| self.left_ideal(a)).collect();

        let (r_classes, r_class_of) = partition_by_key(&right_ideals);
        let (l_classes, l_class_of) = partition_by_key(&left_ideals);

        let h_key: Vec<(usize, usize)> = (0..n).map(|a| (r_class_of[a], l_class_of[a])).collect();
        let (h_classes, h_class_of) = group_pairs(&h_key);

        // D is the join of R and L: union-find over the two partitions.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let union = |parent: &mut [usize], a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        };
        for class in r_classes.iter().chain(l_classes.iter()) {
            for w in class.windows(2) {
                union(&mut parent, w[0], w[1]);
            }
        }
        let d_key: Vec<(usize, usize)> = (0..n).map(|a| (find(&mut parent, a), 0)).collect();
        let (d_classes, d_class_of) = group_pairs(&d_key);

        let two_sided: Vec<Vec<bool>> = (0..n).map(|a| self.two_sided_ideal(a)).collect();
        let k = d_classes.len();
        let mut d_leq = vec![vec![false; k]; k];
        for lower in 0..k {
            let a = d_classes[lower][0];
            for (upper, row) in d_leq[lower].iter_mut().enumerate().take(k) {
                let b = d_classes[upper][0];
                *row = two_sided[b][a];
            }
        }

        let regular = (0..n)
            .map(|a| (0..n).any(|x| self.mul(self.mul(a, x), a) == a))
            .collect();

        GreenStructure {
            r_classes,
            l_classes,
            h_classes,
            d_classes,
            r_class_of,
            l_class_of,
            h_class_of,
            d_class_of,
            regular,
            d_leq,
        }
    }
}
