//! Named small semigroups used by the test suite and the CLI.
//!
//! Transformations compose left to right: `(f·g)(x) = g(f(x))`.

use itertools::Itertools;

use crate::rational::int;
use crate::semigroup::FiniteSemigroup;

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 7] = ["z2", "c4", "s3", "t2", "t3", "leftzero3", "null4"];

pub fn by_name(name: &str) -> Option<FiniteSemigroup> {
    Some(match name {
        "z2" => z2(),
        "c4" => cyclic(4),
        "s3" => s3(),
        "t2" => full_transformation(2),
        "t3" => full_transformation(3),
        "leftzero3" => left_zero(3),
        "null4" => null(4),
        _ => return None,
    })
}

/// The whole curated suite, in [`NAMES`] order.
pub fn suite() -> Vec<(&'static str, FiniteSemigroup)> {
    NAMES
        .iter()
        .map(|&name| (name, by_name(name).expect("catalog name")))
        .collect()
}

pub fn z2() -> FiniteSemigroup {
    cyclic(2)
}

/// Integers modulo `n` under addition.
pub fn cyclic(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group is associative")
}

pub fn s3() -> FiniteSemigroup {
    symmetric(3)
}

/// Permutations of `0..n` in lexicographic order of their image tuples
/// (so the identity is element 0).
pub fn symmetric(n: usize) -> FiniteSemigroup {
    let maps: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    from_maps(&maps)
}

/// All maps `0..n -> 0..n`, ordered by image size (descending) and then
/// lexicographically. For `n = 2` this is id, swap, const0, const1.
pub fn full_transformation(n: usize) -> FiniteSemigroup {
    from_maps(&transformation_maps(n))
}

pub fn image_size(map: &[usize]) -> usize {
    map.iter().unique().count()
}

/// Elements of a transformation semigroup built by [`full_transformation`],
/// as image tuples in element order.
pub fn transformation_maps(n: usize) -> Vec<Vec<usize>> {
    let mut maps: Vec<Vec<usize>> = (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .collect();
    maps.sort_by(|f, g| image_size(g).cmp(&image_size(f)).then_with(|| f.cmp(g)));
    maps
}

fn from_maps(maps: &[Vec<usize>]) -> FiniteSemigroup {
    let index = |m: &Vec<usize>| maps.iter().position(|x| x == m).expect("closed under composition");
    FiniteSemigroup::from_fn(maps.len(), |a, b| {
        let composed: Vec<usize> = maps[a].iter().map(|&x| maps[b][x]).collect();
        index(&composed)
    })
    .expect("composition is associative")
}

/// `x·y = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |a, _| a).expect("left-zero semigroup")
}

/// Every product is element 0.
pub fn null(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |_, _| 0).expect("null semigroup")
}

/// `{0, 1}` under ordinary multiplication, labelled by the numbers themselves.
pub fn multiplicative_zero_one() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(2, |a, b| a * b)
        .and_then(|s| s.with_labels(vec![int(0), int(1)]))
        .expect("{0,1} is a monoid")
}
