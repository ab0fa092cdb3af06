use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;

use num_integer::{Integer, Roots};

use super::{AdmissiblePair, Quaternion};

/// Integer 4-tuples in `[-r, r]⁴`, lexicographically ascending.
fn small_tuples(norm_bound: u64) -> impl Iterator<Item = [i64; 4]> {
    let r = norm_bound.sqrt() as i64;
    let side = (2 * r + 1) as u64;
    (0..side.pow(4)).filter_map(move |mut idx| {
        let mut t = [0i64; 4];
        for slot in t.iter_mut().rev() {
            *slot = (idx % side) as i64 - r;
            idx /= side;
        }
        let n: i64 = t.iter().map(|x| x * x).sum();
        (n >= 1 && n as u64 <= norm_bound).then_some(t)
    })
}

fn is_primitive(t: &[i64; 4]) -> bool {
    t.iter().fold(0i64, |g, x| g.gcd(x)) == 1
}

fn first_nonzero_positive(t: &[i64; 4]) -> bool {
    t.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

fn norm(t: &[i64; 4]) -> u64 {
    t.iter().map(|x| (x * x) as u64).sum()
}

fn odd_part(mut n: u64) -> u64 {
    while n.is_multiple_of(2) {
        n /= 2;
    }
    n
}

fn to_quaternion(t: [i64; 4]) -> Quaternion {
    Quaternion::new(t[0], t[1], t[2], t[3])
}

/// Primitive Lipschitz quaternions with `|q|² ≤ norm_bound`, one per
/// `±` pair (first nonzero component positive), in lexicographic order.
pub fn primitive_quaternions(norm_bound: u64) -> impl Iterator<Item = Quaternion> {
    small_tuples(norm_bound).filter(|t| is_primitive(t) && first_nonzero_positive(t)).map(to_quaternion)
}

/// As [`primitive_quaternions`] but with both signs.
pub fn primitive_quaternions_signed(norm_bound: u64) -> impl Iterator<Item = Quaternion> {
    small_tuples(norm_bound).filter(is_primitive).map(to_quaternion)
}

/// Admissible pairs `(q, p)` with `Σ_{D₄}(R_{q,p}) ≤ sigma_bound`.
///
/// `q` is taken up to sign (since `R_{−q,−p} = R_{q,p}`) and `p` with both
/// signs. Pairs are ordered by `q`, then `|p|²`, then `p`.
pub fn admissible_pairs(sigma_bound: u64) -> impl Iterator<Item = AdmissiblePair> {
    // the norm of a primitive quaternion is not divisible by 8
    let norm_bound = 4 * sigma_bound;
    let mut shells: BTreeMap<u64, Vec<[i64; 4]>> = BTreeMap::new();
    for t in small_tuples(norm_bound).filter(is_primitive) {
        if odd_part(norm(&t)) <= sigma_bound {
            shells.entry(norm(&t)).or_default().push(t);
        }
    }
    let shells = Rc::new(shells);
    let mut qs: Vec<[i64; 4]> = shells.values().flatten().copied().filter(first_nonzero_positive).collect();
    qs.sort_unstable();
    qs.into_iter().flat_map(move |q| {
        let nq = norm(&q);
        let oq = odd_part(nq);
        let shells = Rc::clone(&shells);
        let norms: Vec<u64> = shells
            .keys()
            .copied()
            .filter(|&np| is_square(nq * np) && oq.lcm(&odd_part(np)) <= sigma_bound)
            .collect();
        norms.into_iter().flat_map(move |np| {
            let ps = shells[&np].clone();
            ps.into_iter().map(move |p| {
                AdmissiblePair::new(to_quaternion(q), to_quaternion(p)).expect("filtered for admissibility")
            })
        })
    })
}

fn is_square(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}
