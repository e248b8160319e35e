//! Explicit labelings of caterpillars and double stars, and the maps that
//! turn one consecutive magic labeling into another.

use std::borrow::Cow;

use serde::{Deserialize, Serialize};

use crate::graph::{
    bipartition_of, build_caterpillar, build_double_star, Bipartition, CaterpillarSpec, Graph, Side, VertexName,
};
use crate::labeling::{consecutive_index_of, magic_constant_of, small_label_side, TotalLabeling, VertexLabeling};
use crate::{Error, Label, Result};

/// The `β`-edge consecutive magic labeling of a caterpillar, with magic
/// constant `2α + 4β`. Side Y (size `β`) receives `1..=β`.
///
/// Labels are aligned with [`build_caterpillar`]'s vertex and edge order.
pub fn caterpillar_beta_labeling(spec: &CaterpillarSpec) -> TotalLabeling {
    let handle = build_caterpillar(spec);
    let g = &handle.graph;
    let n = |i: usize| spec.leaves_at(i) as i64;
    // Σ_{l=1}^{upto} n_{2l} and Σ_{l=1}^{upto} n_{2l-1}
    let even_sum = |upto: usize| (1..=upto).map(|l| n(2 * l)).sum::<i64>();
    let odd_sum = |upto: usize| (1..=upto).map(|l| n(2 * l - 1)).sum::<i64>();
    // Σ_{l=1}^{upto} n_l
    let prefix = |upto: usize| (1..=upto).map(n).sum::<i64>();

    let alpha = spec.alpha() as i64;
    let beta = spec.beta() as i64;
    let top = alpha + 2 * beta;

    let mut vertex_labels = vec![0i64; g.vertex_count()];
    let mut edge_labels = vec![0i64; g.edge_count()];
    let mut set_edge = |u: usize, v: usize, label: i64| {
        edge_labels[g.edge_index(u, v).expect("caterpillar edge")] = label;
    };
    let spine = |i: usize| handle.vertex(VertexName::Spine(i)).expect("spine vertex");
    let leaf = |i: usize, j: usize| handle.vertex(VertexName::Leaf(i, j)).expect("leaf vertex");

    for s in 1..=spec.spine_length() {
        let i = s.div_ceil(2) as i64;
        let t = s.div_ceil(2);
        if s % 2 == 1 {
            vertex_labels[spine(s)] = top - 1 + even_sum(t - 1) + i;
            for j in 1..=spec.leaves_at(s) {
                vertex_labels[leaf(s, j)] = odd_sum(t - 1) + i + j as i64 - 1;
                set_edge(spine(s), leaf(s, j), top - 2 * i + 2 - prefix(s - 1) - j as i64);
            }
        } else {
            vertex_labels[spine(s)] = odd_sum(t) + i;
            for j in 1..=spec.leaves_at(s) {
                vertex_labels[leaf(s, j)] = top - 1 + even_sum(t - 1) + i + j as i64;
                set_edge(spine(s), leaf(s, j), top - 2 * i + 1 - prefix(s - 1) - j as i64);
            }
        }
        if s < spec.spine_length() {
            set_edge(spine(s), spine(s + 1), top - s as i64 - prefix(s));
        }
    }
    let to_labels = |v: Vec<i64>| {
        v.into_iter()
            .map(|l| Label::try_from(l).expect("positive label"))
            .collect()
    };
    TotalLabeling::from_parts_unchecked(to_labels(vertex_labels), to_labels(edge_labels))
}

/// The two `(m+1)`-edge consecutive labelings of the double star `S_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DoubleStarVariant {
    /// Low center `m + 1`, high center `2m + n + 3`.
    First,
    /// Low center `1`, high center `2m + 2n + 3`.
    Second,
}

impl TryFrom<u8> for DoubleStarVariant {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(DoubleStarVariant::First),
            2 => Ok(DoubleStarVariant::Second),
            _ => Err(Error::InvalidFamily(format!(
                "double star variant must be 1 or 2, got {v}"
            ))),
        }
    }
}

/// An `(m+1)`-edge consecutive magic labeling of `S_{m,n}` with constant
/// `4m + 2n + 6`.
///
/// The low side `{v} ∪ leaves(u)` (size `m + 1`) takes `1..=m+1`; the high side
/// `{u} ∪ leaves(v)` takes `2m+n+3 ..= 2m+2n+3`. The variant fixes the two
/// center labels, leaves get the remaining labels of their side in ascending
/// order, and edge labels are forced by the constant.
pub fn double_star_consecutive(m: usize, n: usize, variant: DoubleStarVariant) -> Result<TotalLabeling> {
    let handle = build_double_star(m, n)?;
    let g = &handle.graph;
    let (u, v) = handle.double_star_centers().expect("double star centers");
    let (m_, n_) = (m as Label, n as Label);
    let (low_center, high_center) = match variant {
        DoubleStarVariant::First => (m_ + 1, 2 * m_ + n_ + 3),
        DoubleStarVariant::Second => (1, 2 * m_ + 2 * n_ + 3),
    };
    let k = 4 * m_ + 2 * n_ + 6;

    let mut vertex_labels = vec![0; g.vertex_count()];
    vertex_labels[v] = low_center;
    vertex_labels[u] = high_center;
    let low_rest = (1..=m_ + 1).filter(|&l| l != low_center);
    for (j, label) in (1..=m).zip(low_rest) {
        vertex_labels[handle.vertex(VertexName::Leaf(1, j)).unwrap()] = label;
    }
    let high_rest = (2 * m_ + n_ + 3..=2 * m_ + 2 * n_ + 3).filter(|&l| l != high_center);
    for (j, label) in (1..=n).zip(high_rest) {
        vertex_labels[handle.vertex(VertexName::Leaf(2, j)).unwrap()] = label;
    }
    let edge_labels = g
        .edges()
        .iter()
        .map(|&(a, b)| k - vertex_labels[a] - vertex_labels[b])
        .collect();
    TotalLabeling::new(vertex_labels, edge_labels)
}

/// The complement map `z ↦ |V| + |E| + 1 - z` on every label.
///
/// Sends constant `k` to `3(|V| + |E| + 1) - k` and a `b`-edge consecutive
/// labeling to a `(|V| - b)`-edge consecutive one.
pub fn dual(g: &Graph, labeling: &TotalLabeling) -> Result<TotalLabeling> {
    if magic_constant_of(g, labeling)?.is_none() {
        return Err(Error::NotMagic);
    }
    let top = labeling.max_label() + 1;
    Ok(labeling.map_unchecked(|_, l| top - l, |_, l| top - l))
}

/// Magic constant of the dual labeling.
pub fn dual_constant(g: &Graph, k: Label) -> Label {
    3 * (g.label_count() as Label + 1) - k
}

/// Which of the four block-reflection maps applies to a consecutive labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LambdaStarCase {
    /// `b = 0`.
    BZero,
    /// `b = |V|`.
    BFull,
    /// `b = |X|` with side X carrying `1..=b`.
    BX,
    /// `b = |Y|` with side Y carrying `1..=b`.
    BY,
}

fn resolve_bipartition<'a>(g: &Graph, bipartition: Option<&'a Bipartition>) -> Result<Cow<'a, Bipartition>> {
    match bipartition {
        Some(b) => Ok(Cow::Borrowed(b)),
        None => bipartition_of(g)?.map(Cow::Owned).ok_or(Error::NotBipartite),
    }
}

/// Determines the case from the labeling itself: for `b` equal to a side size,
/// the side whose labels are exactly `1..=b` plays the role of the small side.
pub fn lambda_star_case(
    g: &Graph,
    bipartition: Option<&Bipartition>,
    labeling: &TotalLabeling,
) -> Result<LambdaStarCase> {
    let b = consecutive_index_of(g, labeling)?.ok_or(Error::NotConsecutive)?;
    if b == 0 {
        return Ok(LambdaStarCase::BZero);
    }
    if b as usize == g.vertex_count() {
        return Ok(LambdaStarCase::BFull);
    }
    let bip = match resolve_bipartition(g, bipartition) {
        Ok(bip) => bip,
        Err(Error::NotBipartite) => return Err(Error::InadmissibleIndex { b }),
        Err(e) => return Err(e),
    };
    match small_label_side(&bip, labeling, b) {
        Some(Side::X) => Ok(LambdaStarCase::BX),
        Some(Side::Y) => Ok(LambdaStarCase::BY),
        None => Err(Error::InadmissibleIndex { b }),
    }
}

/// Magic constant after applying the reflection for `case` to a labeling with
/// constant `k`.
pub fn lambda_star_constant(
    g: &Graph,
    bipartition: Option<&Bipartition>,
    case: LambdaStarCase,
    k: Label,
) -> Result<Label> {
    let v = g.vertex_count() as Label;
    let e = g.edge_count() as Label;
    Ok(match case {
        LambdaStarCase::BZero => 2 * v + 5 * e + 3 - k,
        LambdaStarCase::BFull => 4 * v + e + 3 - k,
        LambdaStarCase::BX | LambdaStarCase::BY => {
            let bip = resolve_bipartition(g, bipartition)?;
            let small = if case == LambdaStarCase::BX { Side::X } else { Side::Y };
            let s = bip.len(small) as Label;
            let o = bip.len(small.other()) as Label;
            5 * s + o + 3 * e + 3 - k
        }
    })
}

/// Reflects each label block of a `b`-edge consecutive labeling in place,
/// producing another `b`-edge consecutive labeling.
///
/// Every case is an involution.
pub fn lambda_star(g: &Graph, bipartition: Option<&Bipartition>, labeling: &TotalLabeling) -> Result<TotalLabeling> {
    let case = lambda_star_case(g, bipartition, labeling)?;
    let v = g.vertex_count() as Label;
    let e = g.edge_count() as Label;
    Ok(match case {
        LambdaStarCase::BZero => labeling.map_unchecked(|_, l| v + 2 * e + 1 - l, |_, l| e + 1 - l),
        LambdaStarCase::BFull => labeling.map_unchecked(|_, l| v + 1 - l, |_, l| 2 * v + e + 1 - l),
        LambdaStarCase::BX | LambdaStarCase::BY => {
            let bip = resolve_bipartition(g, bipartition)?;
            let small = if case == LambdaStarCase::BX { Side::X } else { Side::Y };
            let s = bip.len(small) as Label;
            let o = bip.len(small.other()) as Label;
            labeling.map_unchecked(
                |x, l| {
                    if bip.side(x) == small {
                        s + 1 - l
                    } else {
                        2 * s + o + 2 * e + 1 - l
                    }
                },
                |_, l| 2 * s + e + 1 - l,
            )
        }
    })
}

/// Checks that `labeling` is `s`-edge consecutive with some side of size `s`
/// carrying exactly `1..=s`, and returns that side.
fn side_consecutive_small_side(g: &Graph, bip: &Bipartition, labeling: &TotalLabeling) -> Result<Side> {
    let b = consecutive_index_of(g, labeling)?
        .ok_or_else(|| Error::Precondition("labeling is not an edge consecutive magic labeling".into()))?;
    small_label_side(bip, labeling, b)
        .ok_or_else(|| Error::Precondition(format!("no partite side carries exactly the labels 1..={b}")))
}

/// Graceful labeling from a side-consecutive labeling: `λ - 1` on the small
/// side `S`, `|E| + 2|S| + |other| - λ` on the other side.
pub fn to_graceful(g: &Graph, bipartition: Option<&Bipartition>, labeling: &TotalLabeling) -> Result<VertexLabeling> {
    let bip = resolve_bipartition(g, bipartition)?;
    let small = side_consecutive_small_side(g, &bip, labeling)?;
    let e = g.edge_count() as Label;
    let s = bip.len(small) as Label;
    let o = bip.len(small.other()) as Label;
    let labels = (0..g.vertex_count())
        .map(|z| {
            let l = labeling.vertex(z);
            if bip.side(z) == small {
                l - 1
            } else {
                e + 2 * s + o - l
            }
        })
        .collect();
    VertexLabeling::new(labels, g.edge_count())
}

/// Super edge-magic labeling from a side-consecutive labeling: the small side
/// keeps its labels, the other side drops by `|E|`, edges rise by `|other|`.
pub fn to_super_edge_magic(
    g: &Graph,
    bipartition: Option<&Bipartition>,
    labeling: &TotalLabeling,
) -> Result<TotalLabeling> {
    let bip = resolve_bipartition(g, bipartition)?;
    let small = side_consecutive_small_side(g, &bip, labeling)?;
    let e = g.edge_count() as Label;
    let o = bip.len(small.other()) as Label;
    Ok(labeling.map_unchecked(|z, l| if bip.side(z) == small { l } else { l - e }, |_, l| l + o))
}

/// Super edge-magic labeling of a caterpillar with constant `2α + 3β + 1`,
/// derived from [`caterpillar_beta_labeling`].
pub fn caterpillar_super_labeling(spec: &CaterpillarSpec) -> TotalLabeling {
    let handle = build_caterpillar(spec);
    let bip = handle.bipartition.as_ref().expect("caterpillar bipartition");
    let beta_labeling = caterpillar_beta_labeling(spec);
    let alpha = spec.alpha() as Label;
    let beta = spec.beta() as Label;
    beta_labeling.map_unchecked(
        |z, l| match bip.side(z) {
            Side::Y => l,
            Side::X => l + 1 - alpha - beta,
        },
        |_, l| l + alpha,
    )
}
