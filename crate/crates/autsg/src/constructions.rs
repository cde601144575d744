//! Deterministic builders for the semigroup families and concrete tables
//! used throughout the test corpus and the CLI `gen` subcommand.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad parameter: {0}")]
pub struct ParamError(pub String);

fn build(names: Vec<String>, table: Vec<Vec<usize>>) -> FiniteSemigroup {
    FiniteSemigroup::new(names, table).expect("construction produces a valid table")
}

/// `x_i x_j = x_i`.
pub fn left_zero(n: usize) -> Result<FiniteSemigroup, ParamError> {
    if n == 0 {
        return Err(ParamError("left_zero needs n >= 1".into()));
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let table = (0..n).map(|i| vec![i; n]).collect();
    Ok(build(names, table))
}

/// `y_i y_j = y_j`.
pub fn right_zero(n: usize) -> Result<FiniteSemigroup, ParamError> {
    if n == 0 {
        return Err(ParamError("right_zero needs n >= 1".into()));
    }
    let names = (1..=n).map(|i| format!("y{i}")).collect();
    let table = (0..n).map(|_| (0..n).collect()).collect();
    Ok(build(names, table))
}

/// `(i,j)(k,l) = (i,l)` on a `p × q` grid.
pub fn rectangular_band(p: usize, q: usize) -> Result<FiniteSemigroup, ParamError> {
    if p == 0 || q == 0 {
        return Err(ParamError("rectangular_band needs p, q >= 1".into()));
    }
    let mut names = Vec::with_capacity(p * q);
    for i in 1..=p {
        for j in 1..=q {
            names.push(format!("({i},{j})"));
        }
    }
    let table = (0..p * q)
        .map(|x| {
            let row = x / q;
            (0..p * q).map(|y| row * q + (y % q)).collect()
        })
        .collect();
    Ok(build(names, table))
}

/// Totally ordered idempotents: `e_i e_j = e_max(i,j)`, with `e1` the
/// identity.
pub fn chain_semilattice(n: usize) -> Result<FiniteSemigroup, ParamError> {
    if n == 0 {
        return Err(ParamError("chain_semilattice needs n >= 1".into()));
    }
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    let table = (0..n).map(|i| (0..n).map(|j| i.max(j)).collect()).collect();
    Ok(build(names, table))
}

/// The cyclic group of order `n`.
pub fn cyclic_group(n: usize) -> Result<FiniteSemigroup, ParamError> {
    if n == 0 {
        return Err(ParamError("cyclic_group needs n >= 1".into()));
    }
    let names = (0..n).map(|i| format!("g{i}")).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    Ok(build(names, table))
}

/// `x, x², …, x^k` with `x^i x^j = x^min(i+j,k)`; `x^k` is the absorbing
/// zero.
pub fn nilpotent_monogenic(k: usize) -> Result<FiniteSemigroup, ParamError> {
    if k < 2 {
        return Err(ParamError("nilpotent_monogenic needs k >= 2".into()));
    }
    let names = (1..=k).map(|i| format!("x{i}")).collect();
    let table = (0..k)
        .map(|i| (0..k).map(|j| (i + j + 1).min(k - 1)).collect())
        .collect();
    Ok(build(names, table))
}

/// The two hand-picked four-element tables exercised all over the test
/// suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleTable {
    /// Not a band, yet its square is a three-element left-zero band and its
    /// left-regular representation is faithful.
    NonBand,
    /// The canonical map collapses three of the four generators; its square
    /// is a three-element right-zero band.
    Collapse,
}

pub fn example_table(which: ExampleTable) -> FiniteSemigroup {
    let names = vec!["a".into(), "b".into(), "c".into(), "d".into()];
    let table = match which {
        ExampleTable::NonBand => vec![
            vec![1, 1, 1, 2],
            vec![1, 1, 1, 1],
            vec![2, 2, 2, 2],
            vec![3, 3, 3, 3],
        ],
        ExampleTable::Collapse => vec![
            vec![0, 1, 2, 0],
            vec![0, 1, 2, 0],
            vec![0, 1, 2, 1],
            vec![0, 1, 2, 0],
        ],
    };
    build(names, table)
}

fn fresh_name(mut candidate: String, taken: &BTreeSet<String>) -> String {
    while taken.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

/// Disjoint union of `a` and `b` plus a new zero; all cross products and
/// products with the zero are zero. With `merge_zeros`, an absorbing zero
/// already present in either part is identified with the new zero.
pub fn zero_union(a: &FiniteSemigroup, b: &FiniteSemigroup, merge_zeros: bool) -> FiniteSemigroup {
    let za = if merge_zeros { a.zero() } else { None };
    let zb = if merge_zeros { b.zero() } else { None };

    let a_members: Vec<usize> = (0..a.size()).filter(|&i| Some(i) != za).collect();
    let b_members: Vec<usize> = (0..b.size()).filter(|&i| Some(i) != zb).collect();
    let zero = a_members.len() + b_members.len();

    let mut taken = BTreeSet::new();
    let mut names = Vec::with_capacity(zero + 1);
    for &i in &a_members {
        let name = fresh_name(a.name(i).to_string(), &taken);
        taken.insert(name.clone());
        names.push(name);
    }
    for &i in &b_members {
        let name = fresh_name(b.name(i).to_string(), &taken);
        taken.insert(name.clone());
        names.push(name);
    }
    names.push(fresh_name("0".into(), &taken));

    let mut a_map = vec![zero; a.size()];
    for (new, &old) in a_members.iter().enumerate() {
        a_map[old] = new;
    }
    let mut b_map = vec![zero; b.size()];
    for (new, &old) in b_members.iter().enumerate() {
        b_map[old] = a_members.len() + new;
    }

    let n = zero + 1;
    let mut table = vec![vec![zero; n]; n];
    for (x, &i) in a_members.iter().enumerate() {
        for (y, &j) in a_members.iter().enumerate() {
            table[x][y] = a_map[a.mul(i, j)];
        }
    }
    for (x, &i) in b_members.iter().enumerate() {
        for (y, &j) in b_members.iter().enumerate() {
            table[a_members.len() + x][a_members.len() + y] = b_map[b.mul(i, j)];
        }
    }
    build(names, table)
}

/// Attaches `tail_counts[i]` tail elements to each part: `a_{i,j} s = a_{i,j}`
/// for `s` in part `i`, every other new product is the adjoined zero.
pub fn tails_construction(
    parts: &[FiniteSemigroup],
    tail_counts: &[usize],
) -> Result<FiniteSemigroup, ParamError> {
    if parts.len() != tail_counts.len() {
        return Err(ParamError(
            "tails_construction needs one tail count per part".into(),
        ));
    }
    if tail_counts.contains(&0) {
        return Err(ParamError("tail counts must be >= 1".into()));
    }

    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0usize;
    for part in parts {
        offsets.push(total);
        total += part.size();
    }
    let mut tail_offsets = Vec::with_capacity(parts.len());
    let mut tail_total = total;
    for &count in tail_counts {
        tail_offsets.push(tail_total);
        tail_total += count;
    }
    let zero = tail_total;
    let n = zero + 1;

    let mut taken = BTreeSet::new();
    let mut names = Vec::with_capacity(n);
    for part in parts {
        for name in part.names() {
            let name = fresh_name(name.clone(), &taken);
            taken.insert(name.clone());
            names.push(name);
        }
    }
    for (i, &count) in tail_counts.iter().enumerate() {
        for j in 1..=count {
            let name = fresh_name(format!("a{}_{}", i + 1, j), &taken);
            taken.insert(name.clone());
            names.push(name);
        }
    }
    names.push(fresh_name("0".into(), &taken));

    let mut table = vec![vec![zero; n]; n];
    for (p, part) in parts.iter().enumerate() {
        let base = offsets[p];
        for i in 0..part.size() {
            for j in 0..part.size() {
                table[base + i][base + j] = base + part.mul(i, j);
            }
        }
        for t in 0..tail_counts[p] {
            let tail = tail_offsets[p] + t;
            for s in 0..part.size() {
                table[tail][base + s] = tail;
            }
        }
    }
    Ok(build(names, table))
}

/// One new element `1` acting as a two-sided identity, appended after the
/// existing elements.
pub fn adjoin_identity(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.size();
    let taken: BTreeSet<String> = s.names().iter().cloned().collect();
    let mut names: Vec<String> = s.names().to_vec();
    names.push(fresh_name("1".into(), &taken));
    let mut table = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = s.row(i).to_vec();
        row.push(i);
        table.push(row);
    }
    table.push((0..=n).collect());
    build(names, table)
}

/// The 36-element counterexample semigroup suggested by Steinberg, plus all
/// the intermediate semigroups of its construction.
#[derive(Debug, Clone)]
pub struct SteinbergBundle {
    /// `⟨a, b⟩` acting on the right of five points.
    pub t: FiniteSemigroup,
    /// `⟨a', b'⟩` acting on the left of five points; the dual of `t`.
    pub tprime: FiniteSemigroup,
    /// `⟨(a',a), (b',b)⟩ ≤ tprime × t`, eleven elements.
    pub that: FiniteSemigroup,
    /// The 5×5 rectangular band.
    pub r: FiniteSemigroup,
    /// `that ∪ r` with mixed products `(u,v)(i,j) = (u(i),j)` and
    /// `(i,j)(u,v) = (i,jv)`.
    pub s: FiniteSemigroup,
    /// Index of each element of `that` inside `s`.
    pub that_embedding: Vec<usize>,
    /// Index of each element of `r` inside `s`.
    pub r_embedding: Vec<usize>,
}

type Line = [usize; 5];

/// x·(fg) = (x·f)·g
fn compose_right(f: &Line, g: &Line) -> Line {
    [g[f[0]], g[f[1]], g[f[2]], g[f[3]], g[f[4]]]
}

/// (fg)(x) = f(g(x))
fn compose_left(f: &Line, g: &Line) -> Line {
    [f[g[0]], f[g[1]], f[g[2]], f[g[3]], f[g[4]]]
}

fn table_from_lines(
    names: Vec<String>,
    lines: &[Line],
    mul: impl Fn(&Line, &Line) -> Line,
) -> FiniteSemigroup {
    let find = |line: &Line| {
        lines
            .iter()
            .position(|l| l == line)
            .expect("closed under composition")
    };
    let table = lines
        .iter()
        .map(|f| lines.iter().map(|g| find(&mul(f, g))).collect())
        .collect();
    build(names, table)
}

pub fn steinberg() -> SteinbergBundle {
    let a: Line = [1, 2, 2, 3, 4];
    let b: Line = [3, 4, 3, 3, 4];
    let a2 = compose_right(&a, &a);
    let ab = compose_right(&a, &b);
    let a2b = compose_right(&a2, &b);
    debug_assert_eq!(compose_right(&b, &a), b);
    debug_assert_eq!(compose_right(&a2, &a), a2);
    debug_assert_eq!(compose_right(&b, &b), b);

    let t_lines = [a, a2, b, ab, a2b];
    let t_names = ["a", "a2", "b", "ab", "a2b"];
    let t = table_from_lines(
        t_names.iter().map(|s| s.to_string()).collect(),
        &t_lines,
        compose_right,
    );

    let ap: Line = a;
    let bp: Line = b;
    let ap2 = compose_left(&ap, &ap);
    let bpap = compose_left(&bp, &ap);
    let bpap2 = compose_left(&bp, &ap2);
    debug_assert_eq!(compose_left(&ap, &bp), bp);

    let tp_lines = [ap, ap2, bp, bpap, bpap2];
    let tp_names = ["a'", "(a')2", "b'", "b'a'", "b'(a')2"];
    let tprime = table_from_lines(
        tp_names.iter().map(|s| s.to_string()).collect(),
        &tp_lines,
        compose_left,
    );

    // Close the pair (a',a), (b',b) under right multiplication by the
    // generators.
    let generators = [(0usize, 0usize), (2usize, 2usize)];
    let mut pairs: Vec<(usize, usize)> = generators.to_vec();
    let mut cursor = 0;
    while cursor < pairs.len() {
        let (u, v) = pairs[cursor];
        cursor += 1;
        for &(gu, gv) in &generators {
            let product = (tprime.mul(u, gu), t.mul(v, gv));
            if !pairs.contains(&product) {
                pairs.push(product);
            }
        }
    }
    let that_names: Vec<String> = pairs
        .iter()
        .map(|&(u, v)| format!("({},{})", tprime.name(u), t.name(v)))
        .collect();
    let that_table: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(u1, v1)| {
            pairs
                .iter()
                .map(|&(u2, v2)| {
                    let product = (tprime.mul(u1, u2), t.mul(v1, v2));
                    pairs
                        .iter()
                        .position(|p| *p == product)
                        .expect("generated subsemigroup is closed")
                })
                .collect()
        })
        .collect();
    let that = build(that_names.clone(), that_table);

    let r = rectangular_band(5, 5).expect("5x5 grid");

    let nt = that.size();
    let total = nt + 25;
    let mut names = that_names;
    names.extend(r.names().iter().cloned());
    let r_index = |i: usize, j: usize| nt + i * 5 + j;
    let mut table = vec![vec![0usize; total]; total];
    for (x, row) in table.iter_mut().enumerate().take(nt) {
        for (y, slot) in row.iter_mut().enumerate().take(nt) {
            *slot = that.mul(x, y);
        }
    }
    for (x, &(u, _v)) in pairs.iter().enumerate() {
        for i in 0..5 {
            for j in 0..5 {
                // (u,v)(i,j) = (u(i), j)
                table[x][r_index(i, j)] = r_index(tp_lines[u][i], j);
            }
        }
    }
    for (y, &(_u, v)) in pairs.iter().enumerate() {
        for i in 0..5 {
            for j in 0..5 {
                // (i,j)(u,v) = (i, j·v)
                table[r_index(i, j)][y] = r_index(i, t_lines[v][j]);
            }
        }
    }
    for i in 0..5 {
        for j in 0..5 {
            for k in 0..5 {
                for l in 0..5 {
                    table[r_index(i, j)][r_index(k, l)] = r_index(i, l);
                }
            }
        }
    }
    let s = build(names, table);

    SteinbergBundle {
        t,
        tprime,
        that,
        r,
        s,
        that_embedding: (0..nt).collect(),
        r_embedding: (nt..total).collect(),
    }
}
