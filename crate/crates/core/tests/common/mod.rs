//! Independent oracles: plain chord-set backtracking and face walking,
//! sharing no code with the library's recursive enumerator.

#![allow(dead_code)]

pub mod tables;

use std::collections::{BTreeMap, HashSet};

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    let (p, q) = a;
    (inside(b.0, p, q) && !(b.1 >= p && b.1 <= q)) || (inside(b.1, p, q) && !(b.0 >= p && b.0 <= q))
}

type ChordSink<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

/// Visits every non-crossing set of diagonals of the `big_n`-gon.
pub fn for_each_chord_set(big_n: usize, mut f: impl FnMut(&[(usize, usize)])) {
    let diagonals: Vec<(usize, usize)> = (0..big_n)
        .flat_map(|i| (i + 2..big_n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == big_n - 1))
        .collect();
    fn rec(
        t: usize,
        diags: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        f: &mut ChordSink,
    ) {
        if t == diags.len() {
            f(chosen);
            return;
        }
        rec(t + 1, diags, chosen, f);
        let d = diags[t];
        if chosen.iter().all(|&c| !crosses(c, d)) {
            chosen.push(d);
            rec(t + 1, diags, chosen, f);
            chosen.pop();
        }
    }
    rec(0, &diagonals, &mut Vec::new(), &mut f);
}

/// Sizes of all faces, found by walking each face with its interior on the left.
pub fn face_sizes(big_n: usize, chords: &[(usize, usize)]) -> Vec<usize> {
    let mut nbrs: Vec<Vec<usize>> = (0..big_n)
        .map(|v| vec![(v + 1) % big_n, (v + big_n - 1) % big_n])
        .collect();
    for &(i, j) in chords {
        nbrs[i].push(j);
        nbrs[j].push(i);
    }
    let off = |x: usize, w: usize| (w + big_n - x) % big_n;
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut sizes = Vec::new();
    let mut starts: Vec<(usize, usize)> = (0..big_n).map(|v| (v, (v + 1) % big_n)).collect();
    for &(i, j) in chords {
        starts.push((i, j));
        starts.push((j, i));
    }
    for start in starts {
        if used.contains(&start) {
            continue;
        }
        let (mut u, mut v) = start;
        let mut size = 0;
        loop {
            used.insert((u, v));
            size += 1;
            let back = off(v, u);
            let w = *nbrs[v]
                .iter()
                .filter(|&&w| off(v, w) < back)
                .max_by_key(|&&w| off(v, w))
                .expect("a turn exists");
            u = v;
            v = w;
            if (u, v) == start {
                break;
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Number of faces at each vertex.
pub fn quiddity(big_n: usize, chords: &[(usize, usize)]) -> Vec<i64> {
    let mut q = vec![1i64; big_n];
    for &(i, j) in chords {
        q[i] += 1;
        q[j] += 1;
    }
    q
}

fn periodic(sizes: &[usize], l: usize) -> bool {
    sizes.iter().all(|&s| (s - 3) % l == 0)
}

/// Dissections of the `(n+2)`-gon into cells of size `≡ 3 (mod l)`, by cell count.
pub fn brute_counts(n: usize, l: usize) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for_each_chord_set(n + 2, |c| {
        if periodic(&face_sizes(n + 2, c), l) {
            *out.entry(c.len() + 1).or_default() += 1;
        }
    });
    out
}

/// Distinct quiddities of those dissections.
pub fn brute_quiddities(n: usize, l: usize) -> HashSet<Vec<i64>> {
    let mut out = HashSet::new();
    for_each_chord_set(n + 2, |c| {
        if periodic(&face_sizes(n + 2, c), l) {
            out.insert(quiddity(n + 2, c));
        }
    });
    out
}

/// Chord sets of those dissections, sorted.
pub fn brute_dissections(n: usize, l: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for_each_chord_set(n + 2, |c| {
        if periodic(&face_sizes(n + 2, c), l) {
            let mut v = c.to_vec();
            v.sort();
            out.push(v);
        }
    });
    out.sort();
    out
}

/// Continuant by its defining recurrence.
pub fn continuant(a: &[i64]) -> i128 {
    let (mut prev, mut cur) = (0i128, 1i128);
    for &x in a {
        let next = x as i128 * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Matrix product `Π [[a, -1], [1, 0]]` in fixed-width integers.
pub fn matrix_product(a: &[i64]) -> [i128; 4] {
    let mut m = [1i128, 0, 0, 1];
    for &x in a {
        let x = x as i128;
        m = [m[0] * x + m[1], -m[0], m[2] * x + m[3], -m[2]];
    }
    m
}

/// Binomial coefficient in `u128`.
pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

/// Catalan numbers by the quadratic recurrence.
pub fn catalans(upto: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for n in 1..=upto {
        c.push((0..n).map(|i| c[i] * c[n - 1 - i]).sum());
    }
    c
}
