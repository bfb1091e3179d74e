//! Invariant rings of the catalog groups: generators built from their
//! formulas, syzygies loaded from fixture data, and derived identities.

pub mod forms;

use lode_exactnum::{parse_rat, rat, Cyclo};
use lode_groups::{catalog_group, GroupError, GroupId, MatGroup};
use lode_mpoly::{det, MPoly};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_SYZYGIES: &str = include_str!("../../../data/syzygies.json");

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("catalog integrity error: {0}")]
    CatalogIntegrityError(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("no syzygy named {0:?} for this group")]
    UnknownSyzygy(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug)]
pub struct Member {
    pub name: String,
    /// Variable name used for this member in syzygies (`Z4`, `Y12`, ...).
    pub symbol: String,
    pub degree: u32,
    pub poly: MPoly,
}

/// How a syzygy was transcribed: exactly as printed, or a labeled
/// alternative reading of a printed relation that fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    Printed,
    Alternative,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SyzygyTerm {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SyzygyRecord {
    pub group: GroupId,
    pub name: String,
    pub reading: Reading,
    #[serde(default)]
    pub note: Option<String>,
    pub vars: Vec<String>,
    pub terms: Vec<SyzygyTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SyzygyFixture {
    pub schema: String,
    pub syzygies: Vec<SyzygyRecord>,
}

impl SyzygyFixture {
    pub fn parse(text: &str) -> Result<SyzygyFixture, InvariantError> {
        let f: SyzygyFixture = serde_json::from_str(text).map_err(|e| InvariantError::Fixture(e.to_string()))?;
        if f.schema != "lode-atlas/syzygies/v1" {
            return Err(InvariantError::Fixture(format!("unsupported schema {:?}", f.schema)));
        }
        for s in &f.syzygies {
            if s.terms.iter().any(|t| t.e.len() != s.vars.len()) {
                return Err(InvariantError::Fixture(format!("{}: exponent length mismatch", s.name)));
            }
            for t in &s.terms {
                parse_rat(&t.c).map_err(|e| InvariantError::Fixture(e.to_string()))?;
            }
        }
        Ok(f)
    }

    pub fn builtin() -> SyzygyFixture {
        SyzygyFixture::parse(DEFAULT_SYZYGIES).expect("built-in syzygy fixture is valid")
    }
}

#[derive(Clone, Debug)]
pub struct Syzygy {
    pub name: String,
    pub reading: Reading,
    pub note: Option<String>,
    pub vars: Vec<String>,
    /// Abstract polynomial in `vars`.
    pub relation: MPoly,
}

impl Syzygy {
    fn from_record(r: &SyzygyRecord) -> Syzygy {
        let n = r.vars.len();
        let relation = MPoly::from_terms(
            n,
            r.terms.iter().map(|t| (t.e.clone(), Cyclo::from_rat(&parse_rat(&t.c).unwrap()))),
        );
        Syzygy { name: r.name.clone(), reading: r.reading, note: r.note.clone(), vars: r.vars.clone(), relation }
    }

    /// Weighted degrees of the relation's terms, given the member degrees.
    pub fn term_weights(&self, set: &InvariantSet) -> Vec<u32> {
        let deg: Vec<u32> = self.vars.iter().map(|v| set.member_by_symbol(v).map_or(0, |m| m.degree)).collect();
        let mut w: Vec<u32> =
            self.relation.terms().map(|(e, _)| e.iter().zip(&deg).map(|(a, b)| a * b).sum()).collect();
        w.sort_unstable();
        w.dedup();
        w
    }
}

#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub reading: Reading,
    pub lhs: MPoly,
    pub rhs: MPoly,
}

#[derive(Clone, Debug)]
pub struct InvariantSet {
    pub group: GroupId,
    pub members: Vec<Member>,
    pub syzygies: Vec<Syzygy>,
    pub derived_identities: Vec<Identity>,
    /// Characters of the extra scalar generator for `x C3` groups, per
    /// member (`omega^degree`).
    pub scalar_characters: Vec<(String, Cyclo)>,
}

/// Outcome of substituting the members into a syzygy.
#[derive(Clone, Debug, Serialize)]
pub struct SyzygyReport {
    pub group: GroupId,
    pub name: String,
    pub reading: Reading,
    pub weights: Vec<u32>,
    pub residual_terms: usize,
    pub residual_degrees: Vec<u32>,
    /// A few residual terms, leading first.
    pub sample: Vec<String>,
    pub note: Option<String>,
}

impl SyzygyReport {
    pub fn is_zero(&self) -> bool {
        self.residual_terms == 0
    }
}

pub fn member(name: &str, symbol: &str, poly: &MPoly) -> Member {
    Member { name: name.into(), symbol: symbol.into(), degree: poly.degree().unwrap_or(0), poly: poly.clone() }
}

impl InvariantSet {
    pub fn degrees(&self) -> Vec<u32> {
        self.members.iter().map(|m| m.degree).collect()
    }

    pub fn member(&self, name: &str) -> Option<&Member> {
        self.members.iter().find(|m| m.name == name)
    }

    pub fn member_by_symbol(&self, sym: &str) -> Option<&Member> {
        self.members.iter().find(|m| m.symbol == sym)
    }

    pub fn syzygy(&self, name: &str, reading: Reading) -> Option<&Syzygy> {
        self.syzygies.iter().find(|s| s.name == name && s.reading == reading)
    }

    /// Residual of a syzygy with the members substituted.
    pub fn residual(&self, s: &Syzygy) -> Result<MPoly, InvariantError> {
        let args: Vec<MPoly> = s
            .vars
            .iter()
            .map(|v| {
                self.member_by_symbol(v)
                    .map(|m| m.poly.clone())
                    .ok_or_else(|| InvariantError::Fixture(format!("unknown symbol {v}")))
            })
            .collect::<Result<_, _>>()?;
        Ok(s.relation.compose(&args))
    }

    pub fn verify_syzygy(&self, name: &str, reading: Reading) -> Result<SyzygyReport, InvariantError> {
        let s = self.syzygy(name, reading).ok_or_else(|| InvariantError::UnknownSyzygy(name.into()))?;
        let res = self.residual(s)?;
        let mut degs: Vec<u32> = res.terms().map(|(e, _)| e.iter().sum()).collect();
        degs.sort_unstable();
        degs.dedup();
        let sample = res
            .terms()
            .take(4)
            .map(|(e, c)| format!("({c})*X1^{}*X2^{}*X3^{}", e[0], e[1], e[2]))
            .collect();
        Ok(SyzygyReport {
            group: self.group,
            name: s.name.clone(),
            reading: s.reading,
            weights: s.term_weights(self),
            residual_terms: res.num_terms(),
            residual_degrees: degs,
            sample,
            note: s.note.clone(),
        })
    }

    pub fn verify_all(&self) -> Result<Vec<SyzygyReport>, InvariantError> {
        self.syzygies.iter().map(|s| self.verify_syzygy(&s.name, s.reading)).collect()
    }

    pub fn check_identities(&self) -> Vec<(String, Reading, bool)> {
        self.derived_identities.iter().map(|i| (i.name.clone(), i.reading, check_identity(&i.lhs, &i.rhs))).collect()
    }

    pub fn identity(&self, name: &str) -> Option<&Identity> {
        self.derived_identities.iter().find(|i| i.name == name)
    }
}

/// Exact equality of expanded polynomials.
pub fn check_identity(lhs: &MPoly, rhs: &MPoly) -> bool {
    lhs == rhs
}

fn members_for(id: GroupId) -> (Vec<Member>, Vec<Identity>) {
    match id.base() {
        GroupId::G168 => {
            let k = forms::klein();
            let ids = vec![Identity {
                name: "54*F6 = det Hess(F4)".into(),
                reading: Reading::Printed,
                lhs: k.f6.scale_rat(&rat(54, 1)),
                rhs: det(&k.f4.hessian()),
            }];
            (
                vec![member("F4", "Z4", &k.f4), member("F6", "Z6", &k.f6), member("F14", "Z14", &k.f14), member("F21", "Z21", &k.f21)],
                ids,
            )
        }
        GroupId::F36SL3 | GroupId::H72SL3 | GroupId::H216SL3 => {
            let h = forms::hessian();
            let (f3, phi3) = forms::hessian_cubics();
            let ids = vec![
                Identity {
                    name: "12*Phi12 = Phi6^2 - F12".into(),
                    reading: Reading::Printed,
                    lhs: h.phi12.scale_rat(&rat(12, 1)),
                    rhs: &(&h.phi6 * &h.phi6) - &h.f12,
                },
                Identity {
                    name: "F3*Phi3 = Phi6".into(),
                    reading: Reading::Printed,
                    lhs: &f3 * &phi3,
                    rhs: h.phi6.clone(),
                },
                // Expanding the cubics gives 108 P^2 + 36 P S - 6 S^2.
                Identity {
                    name: "F3*Phi3 = -6*Phi6".into(),
                    reading: Reading::Alternative,
                    lhs: &f3 * &phi3,
                    rhs: h.phi6.scale_rat(&rat(-6, 1)),
                },
            ];
            let members = match id {
                GroupId::F36SL3 => vec![
                    member("F6", "Z6", &h.f6),
                    member("Phi6", "Y6", &h.phi6),
                    member("R", "Z9", &h.r),
                    member("F12", "Z12", &h.f12),
                    member("Psi12", "Y12", &h.psi12),
                ],
                GroupId::H72SL3 => vec![
                    member("F6", "Z6", &h.f6),
                    member("R", "Z9", &h.r),
                    member("F12", "Z12", &h.f12),
                    member("Phi6^2", "X12", &(&h.phi6 * &h.phi6)),
                ],
                _ => vec![
                    member("R", "Z9", &h.r),
                    member("Phi12", "Y12", &h.phi12),
                    member("F6*F12", "Z18", &(&h.f6 * &h.f12)),
                    member("F6^3", "Y18", &h.f6.pow(3)),
                ],
            };
            (members, ids)
        }
        GroupId::A6SL3 => {
            let a = forms::a6();
            (
                vec![member("F6", "Z6", &a.f6), member("F12", "Z12", &a.f12), member("F30", "Z30", &a.f30), member("F45", "Z45", &a.f45)],
                vec![],
            )
        }
        _ => {
            let a = forms::a5();
            (
                vec![member("F2", "Z2", &a.f2), member("F6", "Z6", &a.f6), member("F10", "Z10", &a.f10), member("F15", "Z15", &a.f15)],
                vec![],
            )
        }
    }
}

/// Builds the invariant set of a catalog group, checking every member
/// against every generator of the group in its invariant frame. For the
/// `x C3` groups the extra scalar generator acts on a member of degree `d`
/// by `omega^d`; these characters are recorded instead.
pub fn build_invariants(id: GroupId) -> Result<InvariantSet, InvariantError> {
    build_invariants_with(id, &SyzygyFixture::builtin())
}

pub fn build_invariants_with(id: GroupId, fixture: &SyzygyFixture) -> Result<InvariantSet, InvariantError> {
    let (members, derived_identities) = members_for(id);
    verify_members(&catalog_group(id.base()), &members)?;
    let mut scalar_characters = Vec::new();
    if id != id.base() {
        let g = catalog_group(id);
        let (zname, z) = g.generators.last().unwrap();
        debug_assert_eq!(zname, "Z");
        let w = z.get(0, 0).clone();
        for m in &members {
            let chi = w.pow(m.degree as i64);
            if m.poly.substitute_linear(z).map_err(GroupError::from)? != m.poly.scale(&chi) {
                return Err(InvariantError::CatalogIntegrityError(format!("{} is not a semi-invariant under Z", m.name)));
            }
            scalar_characters.push((m.name.clone(), chi));
        }
    }
    let syz_group = syzygy_group(id);
    let syzygies = fixture.syzygies.iter().filter(|s| s.group == syz_group).map(Syzygy::from_record).collect();
    Ok(InvariantSet { group: id, members, syzygies, derived_identities, scalar_characters })
}

/// Checks that every member is homogeneous and invariant under every
/// generator of `group`.
pub fn verify_members(group: &MatGroup, members: &[Member]) -> Result<(), InvariantError> {
    for m in members {
        if !m.poly.is_homogeneous() || m.poly.degree() != Some(m.degree) {
            return Err(InvariantError::CatalogIntegrityError(format!("{} is not homogeneous", m.name)));
        }
        if !group.is_invariant(&m.poly)? {
            let gname = group.id.map_or_else(|| "the group".to_string(), |g| g.to_string());
            return Err(InvariantError::CatalogIntegrityError(format!("{} is not invariant under {gname}", m.name)));
        }
    }
    Ok(())
}

/// The group whose fixture records hold this group's syzygies.
fn syzygy_group(id: GroupId) -> GroupId {
    id.base()
}
