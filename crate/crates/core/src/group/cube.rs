//! The cube of fundamental groups of a trisection.
//!
//! Vertices are indexed by the set of families quotiented out, as a bitmask
//! (bit 0 = α, bit 1 = β, bit 2 = γ): 0 is π₁(Σ), one bit a handlebody
//! group, two bits a sector group, all three the total group. Every edge adds
//! one family and is the quotient map sending each generator to itself.

use std::fmt;

use num_bigint::BigInt;

use super::presentation::{
    abelianize_presentation, exponent_vector, surface_quotient, FreeWord, Letter, Presentation,
};
use super::tietze::tietze_simplify;
use super::GroupError;
use crate::diagram::{Family, TrisectionDiagram};
use crate::invariants::k_triple;
use crate::linalg::{contains, quotient_invariants, IntMatrix, QuotientInvariants};

pub const VERTEX_COUNT: usize = 8;
pub const EDGE_COUNT: usize = 12;

fn families_of(mask: usize) -> Vec<Family> {
    Family::ALL
        .into_iter()
        .filter(|f| mask & (1 << *f as usize) != 0)
        .collect()
}

/// Display name of a cube vertex.
pub fn vertex_name(mask: usize) -> String {
    match mask {
        0 => "surface".into(),
        7 => "total".into(),
        1 | 2 | 4 => format!("handlebody_{}", families_of(mask)[0]),
        // sectors follow the pair order (α,β), (β,γ), (γ,α)
        3 => "sector_alpha_beta".into(),
        6 => "sector_beta_gamma".into(),
        5 => "sector_gamma_alpha".into(),
        _ => format!("vertex_{mask}"),
    }
}

/// A homomorphism given by the images of the source generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeMap {
    pub source: usize,
    pub target: usize,
    pub images: Vec<FreeWord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTrisectionCube {
    pub vertices: Vec<Presentation>,
    pub edges: Vec<CubeMap>,
}

/// Builds the cube of quotient presentations. Requires all three Heegaard
/// pairs to be homologically standard.
pub fn build_cube(d: &TrisectionDiagram) -> Result<GroupTrisectionCube, GroupError> {
    k_triple(d)?;
    let vertices: Vec<Presentation> = (0..VERTEX_COUNT)
        .map(|m| surface_quotient(d, &families_of(m)))
        .collect();
    let n = 2 * d.genus();
    let identity: Vec<FreeWord> = (0..n).map(|g| vec![Letter::new(g)]).collect();
    let mut edges = Vec::with_capacity(EDGE_COUNT);
    for source in 0..VERTEX_COUNT {
        for bit in 0..3 {
            if source & (1 << bit) == 0 {
                edges.push(CubeMap {
                    source,
                    target: source | (1 << bit),
                    images: identity.clone(),
                });
            }
        }
    }
    Ok(GroupTrisectionCube { vertices, edges })
}

impl GroupTrisectionCube {
    pub fn edge(&self, source: usize, target: usize) -> Option<&CubeMap> {
        self.edges
            .iter()
            .find(|e| e.source == source && e.target == target)
    }

    pub fn abelianizations(&self) -> Vec<QuotientInvariants> {
        self.vertices.iter().map(abelianize_presentation).collect()
    }

    fn check_shape(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::MalformedCube(msg));
        if self.vertices.len() != VERTEX_COUNT {
            return bad(format!(
                "expected {VERTEX_COUNT} vertices, found {}",
                self.vertices.len()
            ));
        }
        if self.edges.len() != EDGE_COUNT {
            return bad(format!(
                "expected {EDGE_COUNT} edges, found {}",
                self.edges.len()
            ));
        }
        for e in &self.edges {
            let added = e.target & !e.source;
            if e.target >= VERTEX_COUNT || e.source & !e.target != 0 || added.count_ones() != 1 {
                return bad(format!(
                    "edge {} -> {} is not a cube edge",
                    e.source, e.target
                ));
            }
            if self
                .edges
                .iter()
                .filter(|f| f.source == e.source && f.target == e.target)
                .count()
                != 1
            {
                return bad(format!("edge {} -> {} repeated", e.source, e.target));
            }
            let (src, tgt) = (&self.vertices[e.source], &self.vertices[e.target]);
            if e.images.len() != src.generator_count() {
                return bad(format!(
                    "edge {} -> {} gives {} images for {} generators",
                    e.source,
                    e.target,
                    e.images.len(),
                    src.generator_count()
                ));
            }
            if e.images
                .iter()
                .flatten()
                .any(|l| l.generator >= tgt.generator_count())
            {
                return bad(format!(
                    "edge {} -> {} mentions a missing target generator",
                    e.source, e.target
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Verified,
    HomologicallyVerified,
    Failed,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Verified => "Verified",
            CheckStatus::HomologicallyVerified => "HomologicallyVerified",
            CheckStatus::Failed => "Failed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCheck {
    pub source: usize,
    pub target: usize,
    pub status: CheckStatus,
}

/// A square face: `source → left, right → apex`, apex claimed to be the pushout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCheck {
    pub source: usize,
    pub left: usize,
    pub right: usize,
    pub apex: usize,
    pub status: CheckStatus,
    pub detail: String,
}

impl FaceCheck {
    pub fn label(&self) -> String {
        [self.source, self.left, self.right, self.apex]
            .map(vertex_name)
            .join(" / ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeReport {
    pub maps: Vec<MapCheck>,
    pub faces: Vec<FaceCheck>,
}

impl CubeReport {
    pub fn failed_faces(&self) -> usize {
        self.faces
            .iter()
            .filter(|f| f.status == CheckStatus::Failed)
            .count()
    }

    pub fn failed_maps(&self) -> usize {
        self.maps
            .iter()
            .filter(|m| m.status == CheckStatus::Failed)
            .count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_faces() == 0 && self.failed_maps() == 0
    }
}

/// Abelianized map as an `n_source × n_target` matrix.
fn map_matrix(map: &CubeMap, target_gens: usize) -> IntMatrix {
    let rows = map
        .images
        .iter()
        .map(|w| exponent_vector(w, target_gens))
        .collect();
    IntMatrix::from_rows(target_gens, rows).expect("n_target columns")
}

fn check_map(cube: &GroupTrisectionCube, map: &CubeMap) -> CheckStatus {
    let tgt = &cube.vertices[map.target];
    let n = tgt.generator_count();
    let mut hit = vec![false; n];
    for w in &map.images {
        if let [l] = w.as_slice() {
            hit[l.generator] = true;
        }
    }
    if hit.iter().all(|&h| h) {
        return CheckStatus::Verified;
    }
    let image = map_matrix(map, n)
        .vstack(&tgt.exponent_matrix())
        .expect("n columns");
    if quotient_invariants(n, &image)
        .expect("n columns")
        .is_trivial()
    {
        CheckStatus::HomologicallyVerified
    } else {
        CheckStatus::Failed
    }
}

fn substitute(w: &[Letter], images: &[FreeWord], offset: usize) -> FreeWord {
    let mut out = Vec::new();
    for l in w {
        let img = &images[l.generator];
        if l.inverse {
            out.extend(img.iter().rev().map(|m| Letter {
                generator: m.generator + offset,
                inverse: !m.inverse,
            }));
        } else {
            out.extend(img.iter().map(|m| Letter {
                generator: m.generator + offset,
                inverse: m.inverse,
            }));
        }
    }
    out
}

/// `left ⊔ right` amalgamated over the images of the source generators.
fn pushout(
    source: &Presentation,
    left: (&Presentation, &CubeMap),
    right: (&Presentation, &CubeMap),
) -> Presentation {
    let (lp, lm) = left;
    let (rp, rm) = right;
    let shift = lp.generator_count();
    let mut names: Vec<String> = lp.names().iter().map(|n| format!("{n}'")).collect();
    names.extend(rp.names().iter().map(|n| format!("{n}\"")));
    let mut relators: Vec<FreeWord> = lp.relators().to_vec();
    relators.extend(
        rp.relators()
            .iter()
            .map(|r| substitute(r, &identity_images(rp.generator_count()), shift)),
    );
    for g in 0..source.generator_count() {
        let mut r = lm.images[g].clone();
        r.extend(substitute(
            &[Letter::inv(0)],
            &[rm.images[g].clone()],
            shift,
        ));
        relators.push(r);
    }
    Presentation::with_names(names, relators).expect("generators in range")
}

fn identity_images(n: usize) -> Vec<FreeWord> {
    (0..n).map(|g| vec![Letter::new(g)]).collect()
}

/// Checks that the two routes around the face agree after abelianizing the apex.
fn face_commutes(cube: &GroupTrisectionCube, s: usize, l: usize, r: usize, t: usize) -> bool {
    let nt = cube.vertices[t].generator_count();
    let route = |mid: usize| {
        let first = map_matrix(
            cube.edge(s, mid).expect("edge"),
            cube.vertices[mid].generator_count(),
        );
        let second = map_matrix(cube.edge(mid, t).expect("edge"), nt);
        first.checked_mul(&second).expect("composable")
    };
    let (a, b) = (route(l), route(r));
    let relations = cube.vertices[t].exponent_matrix();
    (0..a.rows()).all(|i| {
        let diff: Vec<BigInt> = a.row(i).iter().zip(b.row(i)).map(|(x, y)| x - y).collect();
        contains(&relations, &diff).expect("n columns")
    })
}

fn check_face(
    cube: &GroupTrisectionCube,
    s: usize,
    l: usize,
    r: usize,
    t: usize,
    budget: usize,
) -> FaceCheck {
    let result = |status, detail: String| FaceCheck {
        source: s,
        left: l,
        right: r,
        apex: t,
        status,
        detail,
    };
    if !face_commutes(cube, s, l, r, t) {
        return result(
            CheckStatus::Failed,
            "face does not commute on abelianizations".into(),
        );
    }
    let v = &cube.vertices;
    let po = pushout(
        &v[s],
        (&v[l], cube.edge(s, l).expect("edge")),
        (&v[r], cube.edge(s, r).expect("edge")),
    );
    let (ab_po, ab_apex) = (abelianize_presentation(&po), abelianize_presentation(&v[t]));
    if ab_po != ab_apex {
        return result(
            CheckStatus::Failed,
            format!("pushout abelianizes to {ab_po}, vertex to {ab_apex}"),
        );
    }
    let simple_po = tietze_simplify(&po, budget);
    let simple_apex = tietze_simplify(&v[t], budget);
    if simple_po.canonical_key() == simple_apex.canonical_key() {
        result(
            CheckStatus::Verified,
            format!("both simplify to {}", simple_apex),
        )
    } else {
        result(
            CheckStatus::HomologicallyVerified,
            format!("abelianizations agree ({ab_apex})"),
        )
    }
}

/// The six faces as `(source, left, right, apex)`.
pub fn faces() -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for bit in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&b| b != bit).map(|b| 1 << b).collect();
        for s in [0, 1 << bit] {
            out.push((s, s | others[0], s | others[1], s | others[0] | others[1]));
        }
    }
    out
}

/// Surjectivity of every map and the pushout property of every face, each
/// with a three-valued outcome. Tietze runs are limited to `budget` moves.
pub fn verify_cube(cube: &GroupTrisectionCube, budget: usize) -> Result<CubeReport, GroupError> {
    cube.check_shape()?;
    let maps = cube
        .edges
        .iter()
        .map(|e| MapCheck {
            source: e.source,
            target: e.target,
            status: check_map(cube, e),
        })
        .collect();
    let faces = faces()
        .into_iter()
        .map(|(s, l, r, t)| check_face(cube, s, l, r, t, budget))
        .collect();
    Ok(CubeReport { maps, faces })
}
