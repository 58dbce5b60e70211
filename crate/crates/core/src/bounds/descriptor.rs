//! Symbolic descriptions of spaces and the attributes that can be read off them directly.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::interval::{ExtNat, Interval};
use super::BoundsError;
use crate::complex::SimplicialComplex;
use crate::homology::{self, Connectivity};

/// A definite yes/no or unknown. Serialized as `true`, `false` or `null`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Option<bool>", into = "Option<bool>")]
pub enum Tri {
    Yes,
    No,
    #[default]
    Unknown,
}

impl From<Option<bool>> for Tri {
    fn from(b: Option<bool>) -> Self {
        match b {
            Some(true) => Tri::Yes,
            Some(false) => Tri::No,
            None => Tri::Unknown,
        }
    }
}

impl From<Tri> for Option<bool> {
    fn from(t: Tri) -> Self {
        match t {
            Tri::Yes => Some(true),
            Tri::No => Some(false),
            Tri::Unknown => None,
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

impl Tri {
    pub fn is_yes(self) -> bool {
        self == Tri::Yes
    }

    pub fn is_no(self) -> bool {
        self == Tri::No
    }

    /// Conjunction over factors: yes if all are yes, no if any is no.
    pub fn all(items: impl IntoIterator<Item = Tri>) -> Tri {
        let mut out = Tri::Yes;
        for t in items {
            match t {
                Tri::No => return Tri::No,
                Tri::Unknown => out = Tri::Unknown,
                Tri::Yes => {}
            }
        }
        out
    }

    fn or(self, fallback: Tri) -> Tri {
        if self == Tri::Unknown {
            fallback
        } else {
            self
        }
    }
}

/// Fundamental groups the engine knows how to reason about.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupClass {
    Trivial,
    FreeAbelian { rank: u64 },
    CyclicTwo,
    Free { rank: u64 },
    /// A group known only through its cohomological dimension and topological complexity.
    Abstract { cd: ExtNat, tc: Interval },
}

impl GroupClass {
    /// Cohomological dimension.
    pub fn cd(&self) -> ExtNat {
        match self.canonical() {
            GroupClass::Trivial => ExtNat::ZERO,
            GroupClass::FreeAbelian { rank } => ExtNat::Fin(rank),
            GroupClass::CyclicTwo => ExtNat::Inf,
            GroupClass::Free { .. } => ExtNat::Fin(1),
            GroupClass::Abstract { cd, .. } => cd,
        }
    }

    /// Identifies `F_0 = Z^0 = 1` and `F_1 = Z^1`.
    pub fn canonical(&self) -> GroupClass {
        match *self {
            GroupClass::FreeAbelian { rank: 0 } | GroupClass::Free { rank: 0 } => GroupClass::Trivial,
            GroupClass::Free { rank: 1 } => GroupClass::FreeAbelian { rank: 1 },
            _ => self.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.canonical() == GroupClass::Trivial
    }

    /// Direct product, when the result is again one of the known classes.
    pub fn product(&self, other: &GroupClass) -> Option<GroupClass> {
        match (self.canonical(), other.canonical()) {
            (GroupClass::Trivial, g) | (g, GroupClass::Trivial) => Some(g),
            (GroupClass::FreeAbelian { rank: a }, GroupClass::FreeAbelian { rank: b }) => {
                Some(GroupClass::FreeAbelian { rank: a + b })
            }
            _ => None,
        }
    }
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.canonical() {
            GroupClass::Trivial => f.write_str("1"),
            GroupClass::FreeAbelian { rank: 1 } => f.write_str("Z"),
            GroupClass::FreeAbelian { rank } => write!(f, "Z^{rank}"),
            GroupClass::CyclicTwo => f.write_str("Z/2"),
            GroupClass::Free { rank } => write!(f, "F_{rank}"),
            GroupClass::Abstract { cd, tc } => write!(f, "G(cd={cd}, TC∈{tc})"),
        }
    }
}

/// User assertions about an explicit complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AttributeSet {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub univ_cover_connectivity: Option<ExtNat>,
    pub simply_connected: Tri,
    pub aspherical: Tri,
    pub h_space: Tri,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fundamental_group: Option<GroupClass>,
}

impl AttributeSet {
    pub fn validate(&self) -> Result<(), BoundsError> {
        let bad = |msg: &str| Err(BoundsError::InvalidDescriptor(msg.to_string()));
        if self.simply_connected.is_yes() && self.univ_cover_connectivity == Some(ExtNat::ZERO) {
            return bad("simply connected forces universal cover connectivity ≥ 1");
        }
        if let Some(g) = &self.fundamental_group {
            if self.simply_connected.is_yes() && !g.is_trivial() {
                return bad("simply connected contradicts a nontrivial fundamental group");
            }
            if self.simply_connected.is_no() && g.is_trivial() {
                return bad("not simply connected contradicts a trivial fundamental group");
            }
        }
        if self.aspherical.is_yes() {
            if let Some(ExtNat::Fin(k)) = self.univ_cover_connectivity {
                return Err(BoundsError::InvalidDescriptor(format!(
                    "an aspherical space has contractible universal cover, not only {k}-connected"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceDescriptor {
    Sphere { n: u64 },
    Torus { n: u64 },
    RealProjective { n: u64 },
    Aspherical { dim: ExtNat, group: GroupClass },
    EilenbergMaclane { group: GroupClass },
    Product { factors: Vec<SpaceDescriptor> },
    Skeleton { base: Box<SpaceDescriptor>, r: u64 },
    Explicit {
        complex: SimplicialComplex,
        #[serde(default)]
        assertions: AttributeSet,
    },
}

/// What can be said about a space without any propagation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub dim: Interval,
    pub conn: Interval,
    pub simply_connected: Tri,
    pub aspherical: Tri,
    pub h_space: Tri,
    pub group: Option<GroupClass>,
    /// `n` when the space is `T^n × Y` with `Y` simply connected.
    pub torus_rank: Option<u64>,
    pub contractible: bool,
    /// Where the dimension and connectivity came from, for citations.
    pub dim_reason: String,
    pub conn_reason: String,
}

impl Profile {
    fn point() -> Profile {
        Profile {
            dim: Interval::exact(0),
            conn: Interval::new(ExtNat::Inf, ExtNat::Inf),
            simply_connected: Tri::Yes,
            aspherical: Tri::Yes,
            h_space: Tri::Yes,
            group: Some(GroupClass::Trivial),
            torus_rank: Some(0),
            contractible: true,
            dim_reason: "a point has dimension 0".into(),
            conn_reason: "a contractible space is ∞-connected".into(),
        }
    }

    fn aspherical_with(group: GroupClass, dim: Interval, dim_reason: String) -> Profile {
        let g = group.canonical();
        let torus_rank = match g {
            GroupClass::Trivial => Some(0),
            GroupClass::FreeAbelian { rank } => Some(rank),
            _ => None,
        };
        Profile {
            dim,
            conn: Interval::new(ExtNat::Inf, ExtNat::Inf),
            simply_connected: g.is_trivial().into(),
            aspherical: Tri::Yes,
            h_space: if torus_rank.is_some() { Tri::Yes } else { Tri::Unknown },
            group: Some(g),
            torus_rank,
            contractible: false,
            dim_reason,
            conn_reason: "an aspherical space has contractible universal cover".into(),
        }
    }
}

fn exact_inf() -> Interval {
    Interval::new(ExtNat::Inf, ExtNat::Inf)
}

/// One maximal simplex means the complex is a simplex, hence contractible.
fn is_simplex(k: &SimplicialComplex) -> bool {
    k.simplices(k.dim()).len() == 1
}

impl SpaceDescriptor {
    pub fn point() -> Self {
        SpaceDescriptor::EilenbergMaclane { group: GroupClass::Trivial }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, SpaceDescriptor::EilenbergMaclane { group } if group.is_trivial())
    }

    pub fn validate(&self) -> Result<(), BoundsError> {
        let bad = |msg: String| Err(BoundsError::InvalidDescriptor(msg));
        match self {
            SpaceDescriptor::Sphere { n }
            | SpaceDescriptor::Torus { n }
            | SpaceDescriptor::RealProjective { n } => {
                if *n == 0 {
                    return bad(format!("{} needs n ≥ 1", self.kind()));
                }
            }
            SpaceDescriptor::Aspherical { dim, group } => {
                if group.cd() > *dim {
                    return bad(format!(
                        "an aspherical space of dimension {dim} cannot have a group of cohomological dimension {}",
                        group.cd()
                    ));
                }
                if let GroupClass::Abstract { tc, .. } = group {
                    if tc.is_empty() {
                        return bad(format!("empty interval {tc} for TC of the group"));
                    }
                }
            }
            SpaceDescriptor::EilenbergMaclane { group } => {
                if let GroupClass::Abstract { tc, .. } = group {
                    if tc.is_empty() {
                        return bad(format!("empty interval {tc} for TC of the group"));
                    }
                }
            }
            SpaceDescriptor::Product { factors } => {
                if factors.is_empty() {
                    return bad("a product needs at least one factor".into());
                }
                for f in factors {
                    f.validate()?;
                }
            }
            SpaceDescriptor::Skeleton { base, r } => {
                if *r == 0 {
                    return bad("skeleton dimension must be at least 1".into());
                }
                base.validate()?;
            }
            SpaceDescriptor::Explicit { complex, assertions } => {
                assertions.validate()?;
                if !complex.is_connected() {
                    return bad("explicit complexes must be connected".into());
                }
                if let Some(d) = assertions.dim {
                    if d != complex.dim() as u64 {
                        return bad(format!(
                            "asserted dimension {d} differs from the complex dimension {}",
                            complex.dim()
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn kind(&self) -> &'static str {
        match self {
            SpaceDescriptor::Sphere { .. } => "sphere",
            SpaceDescriptor::Torus { .. } => "torus",
            SpaceDescriptor::RealProjective { .. } => "real_projective",
            SpaceDescriptor::Aspherical { .. } => "aspherical",
            SpaceDescriptor::EilenbergMaclane { .. } => "eilenberg_maclane",
            SpaceDescriptor::Product { .. } => "product",
            SpaceDescriptor::Skeleton { .. } => "skeleton",
            SpaceDescriptor::Explicit { .. } => "explicit",
        }
    }

    /// Canonical form: recognisable aspherical spaces become tori or points, products are
    /// flattened with torus factors merged and point factors dropped, and skeleta at or above
    /// the dimension collapse to their base.
    pub fn normalize(&self) -> SpaceDescriptor {
        use SpaceDescriptor as D;
        match self {
            D::EilenbergMaclane { group } | D::Aspherical { group, .. } if group.is_trivial() => {
                D::point()
            }
            D::EilenbergMaclane { group } => match group.canonical() {
                GroupClass::FreeAbelian { rank } => D::Torus { n: rank },
                g => D::EilenbergMaclane { group: g },
            },
            D::Aspherical { dim, group } => match group.canonical() {
                GroupClass::FreeAbelian { rank } if *dim == ExtNat::Fin(rank) => D::Torus { n: rank },
                g => D::Aspherical { dim: *dim, group: g },
            },
            D::Product { factors } => {
                let mut flat = Vec::new();
                let mut torus = 0;
                for f in factors {
                    let f = f.normalize();
                    let parts = match f {
                        D::Product { factors } => factors,
                        other => vec![other],
                    };
                    for p in parts {
                        match p {
                            D::Torus { n } | D::Sphere { n: n @ 1 } => torus += n,
                            p if p.is_point() => {}
                            p => flat.push(p),
                        }
                    }
                }
                if torus > 0 {
                    flat.insert(0, D::Torus { n: torus });
                }
                match flat.len() {
                    0 => D::point(),
                    1 => flat.pop().unwrap(),
                    _ => D::Product { factors: flat },
                }
            }
            D::Skeleton { base, r } => {
                let base = base.normalize();
                if let D::Sphere { n } = base {
                    if *r < n {
                        return D::point();
                    }
                }
                let dim = base.profile().map(|p| p.dim);
                match dim {
                    Ok(d) if d.is_singleton() && d.upper <= ExtNat::Fin(*r) => base,
                    _ => D::Skeleton { base: Box::new(base), r: *r },
                }
            }
            D::Explicit { complex, .. } if is_simplex(complex) => D::point(),
            other => other.clone(),
        }
    }

    pub fn label(&self) -> String {
        use SpaceDescriptor as D;
        match self {
            D::Sphere { n } => format!("S^{n}"),
            D::Torus { n } => format!("T^{n}"),
            D::RealProjective { n } => format!("RP^{n}"),
            d if d.is_point() => "pt".into(),
            D::EilenbergMaclane { group } => format!("K({group},1)"),
            D::Aspherical { dim, group } => format!("K({group},1)[dim {dim}]"),
            D::Product { factors } => factors
                .iter()
                .map(|f| match f {
                    D::Product { .. } => format!("({})", f.label()),
                    _ => f.label(),
                })
                .collect::<Vec<_>>()
                .join(" × "),
            D::Skeleton { base, r } => format!("sk_{r}({})", base.label()),
            D::Explicit { complex, .. } => format!(
                "K[{} vertices, dim {}, {} simplices]",
                complex.vertex_count(),
                complex.dim(),
                complex.len()
            ),
        }
    }

    /// Attributes readable from the descriptor alone.
    pub fn profile(&self) -> Result<Profile, BoundsError> {
        use SpaceDescriptor as D;
        Ok(match self {
            d if d.is_point() => Profile::point(),
            D::Sphere { n: 1 } | D::RealProjective { n: 1 } => Profile::aspherical_with(
                GroupClass::FreeAbelian { rank: 1 },
                Interval::exact(1),
                "the circle has dimension 1".into(),
            ),
            D::Sphere { n } => Profile {
                dim: Interval::exact(*n),
                conn: Interval::exact(n - 1),
                simply_connected: Tri::Yes,
                aspherical: Tri::No,
                h_space: matches!(n, 3 | 7).into(),
                group: Some(GroupClass::Trivial),
                torus_rank: Some(0),
                contractible: false,
                dim_reason: format!("S^{n} has dimension {n}"),
                conn_reason: format!("S^{n} is its own universal cover and is {}-connected", n - 1),
            },
            D::Torus { n } => Profile::aspherical_with(
                GroupClass::FreeAbelian { rank: *n },
                Interval::exact(*n),
                format!("T^{n} has dimension {n}"),
            ),
            D::RealProjective { n } => Profile {
                dim: Interval::exact(*n),
                conn: Interval::exact(n - 1),
                simply_connected: Tri::No,
                aspherical: Tri::No,
                h_space: matches!(n, 3 | 7).into(),
                group: Some(GroupClass::CyclicTwo),
                torus_rank: None,
                contractible: false,
                dim_reason: format!("RP^{n} has dimension {n}"),
                conn_reason: format!("the universal cover of RP^{n} is S^{n}, which is {}-connected", n - 1),
            },
            D::Aspherical { dim, group } => Profile::aspherical_with(
                group.clone(),
                Interval::new(*dim, *dim),
                format!("declared dimension {dim}"),
            ),
            D::EilenbergMaclane { group } => {
                let g = group.canonical();
                let (dim, reason) = match g {
                    GroupClass::Free { .. } => {
                        (Interval::exact(1), "a wedge of circles has dimension 1".to_string())
                    }
                    GroupClass::CyclicTwo => {
                        (exact_inf(), "K(Z/2,1) = RP^∞ is infinite dimensional".to_string())
                    }
                    _ => (
                        Interval::new(g.cd(), ExtNat::Inf),
                        format!("a K(π,1) has dimension at least cd(π) = {}", g.cd()),
                    ),
                };
                Profile::aspherical_with(g, dim, reason)
            }
            D::Product { factors } => {
                let ps = factors.iter().map(|f| f.profile()).collect::<Result<Vec<_>, _>>()?;
                let mut group = Some(GroupClass::Trivial);
                for p in &ps {
                    group = match (&group, &p.group) {
                        (Some(a), Some(b)) => a.product(b),
                        _ => None,
                    };
                }
                let add = |f: fn(&Profile) -> ExtNat| {
                    ps.iter().map(f).fold(ExtNat::ZERO, ExtNat::plus)
                };
                Profile {
                    dim: Interval::new(add(|p| p.dim.lower), add(|p| p.dim.upper)),
                    conn: Interval::new(
                        ps.iter().map(|p| p.conn.lower).min().unwrap(),
                        ps.iter().map(|p| p.conn.upper).min().unwrap(),
                    ),
                    simply_connected: Tri::all(ps.iter().map(|p| p.simply_connected)),
                    aspherical: Tri::all(ps.iter().map(|p| p.aspherical)),
                    h_space: Tri::all(ps.iter().map(|p| p.h_space)),
                    group,
                    torus_rank: ps.iter().map(|p| p.torus_rank).sum(),
                    contractible: ps.iter().all(|p| p.contractible),
                    dim_reason: "the dimension of a product is the sum of the dimensions".into(),
                    conn_reason: "the universal cover of a product is the product of the universal covers".into(),
                }
            }
            D::Skeleton { base, r } => {
                let b = base.profile()?;
                let upper = b.dim.upper.min(ExtNat::Fin(*r));
                let exact_family = matches!(**base, D::Torus { .. } | D::RealProjective { .. });
                let lower = if exact_family { upper } else { ExtNat::ZERO };
                let keeps_pi = *r >= 2;
                let conn_floor = if keeps_pi {
                    b.conn.lower.min(ExtNat::Fin(r - 1)).max(ExtNat::Fin(1))
                } else {
                    ExtNat::Fin(1)
                };
                Profile {
                    dim: Interval::new(lower, upper),
                    conn: Interval::new(conn_floor, ExtNat::Inf),
                    simply_connected: if keeps_pi { b.simply_connected } else { Tri::Unknown },
                    aspherical: Tri::Unknown,
                    h_space: Tri::Unknown,
                    group: if keeps_pi { b.group } else { None },
                    torus_rank: None,
                    contractible: false,
                    dim_reason: format!("the {r}-skeleton has dimension at most {r}"),
                    conn_reason: format!(
                        "the inclusion of the {r}-skeleton is {r}-connected, so its universal cover is at least min(conn, {})-connected",
                        r.saturating_sub(1)
                    ),
                }
            }
            D::Explicit { complex, assertions } => {
                let sc = assertions.simply_connected;
                let (conn, conn_reason) = if sc.is_yes() {
                    match homology::connectivity(complex, true) {
                        Ok(Connectivity::Connected(k)) => (
                            Interval::exact(k as u64),
                            format!("Hurewicz: first nonzero reduced homology in degree {}", k + 1),
                        ),
                        Ok(Connectivity::Contractible) => (
                            exact_inf(),
                            "Whitehead: simply connected with vanishing homology".to_string(),
                        ),
                        Err(e) => return Err(BoundsError::InvalidDescriptor(e.to_string())),
                    }
                } else if assertions.aspherical.is_yes() {
                    (exact_inf(), "asserted aspherical".into())
                } else {
                    (Interval::at_least(1), "every universal cover is simply connected".into())
                };
                let group = assertions
                    .fundamental_group
                    .clone()
                    .or(if sc.is_yes() { Some(GroupClass::Trivial) } else { None });
                let sc = sc.or(match &group {
                    Some(g) => g.is_trivial().into(),
                    None => Tri::Unknown,
                });
                Profile {
                    dim: Interval::exact(complex.dim() as u64),
                    conn,
                    simply_connected: sc,
                    aspherical: assertions.aspherical,
                    h_space: assertions.h_space,
                    group,
                    torus_rank: if sc.is_yes() { Some(0) } else { None },
                    contractible: false,
                    dim_reason: "dimension of the complex".into(),
                    conn_reason,
                }
            }
        })
    }

    /// The aspherical space `K(π,1)` of a group class, in normal form.
    pub fn group_space(group: &GroupClass) -> SpaceDescriptor {
        match group.canonical() {
            GroupClass::Free { rank } => {
                SpaceDescriptor::Aspherical { dim: ExtNat::Fin(1), group: GroupClass::Free { rank } }
            }
            g => SpaceDescriptor::EilenbergMaclane { group: g }.normalize(),
        }
    }

    /// The universal cover, when it is again describable.
    pub fn universal_cover(&self) -> Option<SpaceDescriptor> {
        use SpaceDescriptor as D;
        match self {
            D::Sphere { n } if *n >= 2 => Some(self.clone()),
            D::RealProjective { n } if *n >= 2 => Some(D::Sphere { n: *n }),
            D::Sphere { .. }
            | D::RealProjective { .. }
            | D::Torus { .. }
            | D::Aspherical { .. }
            | D::EilenbergMaclane { .. } => Some(D::point()),
            D::Product { factors } => factors
                .iter()
                .map(|f| f.universal_cover())
                .collect::<Option<Vec<_>>>()
                .map(|factors| D::Product { factors }.normalize()),
            D::Skeleton { .. } => None,
            D::Explicit { assertions, .. } => {
                if assertions.simply_connected.is_yes() {
                    Some(self.clone())
                } else if assertions.aspherical.is_yes() {
                    Some(D::point())
                } else {
                    None
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> SpaceDescriptor {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn json_shape() {
        let d = parse(r#"{"type":"product","factors":[{"type":"torus","n":2},{"type":"sphere","n":2}]}"#);
        assert_eq!(d.label(), "T^2 × S^2");
        let p = d.profile().unwrap();
        assert_eq!(p.dim, Interval::exact(4));
        assert_eq!(p.conn, Interval::exact(1));
        assert_eq!(p.torus_rank, Some(2));
        assert_eq!(p.group, Some(GroupClass::FreeAbelian { rank: 2 }));
        assert_eq!(p.aspherical, Tri::No);
    }

    #[test]
    fn normal_forms() {
        let em = SpaceDescriptor::EilenbergMaclane { group: GroupClass::FreeAbelian { rank: 5 } };
        assert_eq!(em.normalize(), SpaceDescriptor::Torus { n: 5 });
        let prod = parse(r#"{"type":"product","factors":[{"type":"sphere","n":1},{"type":"torus","n":2},{"type":"eilenberg_maclane","group":{"type":"trivial"}}]}"#);
        assert_eq!(prod.normalize(), SpaceDescriptor::Torus { n: 3 });
        let sk = parse(r#"{"type":"skeleton","base":{"type":"torus","n":5},"r":7}"#);
        assert_eq!(sk.normalize(), SpaceDescriptor::Torus { n: 5 });
    }

    #[test]
    fn skeleton_profile() {
        let sk = parse(r#"{"type":"skeleton","base":{"type":"torus","n":5},"r":2}"#);
        let p = sk.profile().unwrap();
        assert_eq!(p.dim, Interval::exact(2));
        assert_eq!(p.conn, Interval::at_least(1));
        assert_eq!(p.group, Some(GroupClass::FreeAbelian { rank: 5 }));
        assert_eq!(p.simply_connected, Tri::No);
    }

    #[test]
    fn covers() {
        assert_eq!(
            SpaceDescriptor::RealProjective { n: 8 }.universal_cover(),
            Some(SpaceDescriptor::Sphere { n: 8 })
        );
        let z = parse(r#"{"type":"product","factors":[{"type":"torus","n":2},{"type":"sphere","n":2}]}"#);
        assert_eq!(z.universal_cover(), Some(SpaceDescriptor::Sphere { n: 2 }));
    }

    #[test]
    fn invalid_descriptors() {
        assert!(SpaceDescriptor::Sphere { n: 0 }.validate().is_err());
        let bad = SpaceDescriptor::Aspherical {
            dim: ExtNat::Fin(2),
            group: GroupClass::FreeAbelian { rank: 5 },
        };
        assert!(bad.validate().is_err());
        let attrs = AttributeSet {
            simply_connected: Tri::Yes,
            fundamental_group: Some(GroupClass::CyclicTwo),
            ..Default::default()
        };
        assert!(attrs.validate().is_err());
    }

    #[test]
    fn tri_serde() {
        let a: AttributeSet = serde_json::from_str(r#"{"simply_connected": true}"#).unwrap();
        assert_eq!(a.simply_connected, Tri::Yes);
        assert_eq!(a.aspherical, Tri::Unknown);
    }
}
