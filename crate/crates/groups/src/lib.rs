//! The eight finite primitive subgroups of `SL_3(C)` given by explicit
//! generators, with closure, projective order, (semi-)invariance tests and
//! Molien series.

pub mod consts;

use lode_exactnum::{Cyclo, ExactError, Rat};
use lode_mpoly::{MPoly, MPolyError, Mat};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub const DEFAULT_BOUND: usize = 4000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    ClosureBoundExceeded(usize),
    #[error("not a semi-invariant: image under {0} is not a scalar multiple")]
    NotSemiInvariant(String),
    #[error("unknown group id {0:?}")]
    UnknownGroup(String),
    #[error("group elements not enumerated; run closure first")]
    NotClosed,
    #[error(transparent)]
    Poly(#[from] MPolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    #[serde(rename = "g168")]
    G168,
    #[serde(rename = "g168xc3")]
    G168xC3,
    #[serde(rename = "h216")]
    H216SL3,
    #[serde(rename = "h72")]
    H72SL3,
    #[serde(rename = "f36")]
    F36SL3,
    #[serde(rename = "a6")]
    A6SL3,
    #[serde(rename = "a5")]
    A5,
    #[serde(rename = "a5xc3")]
    A5xC3,
}

impl GroupId {
    pub const ALL: [GroupId; 8] = [
        GroupId::G168,
        GroupId::G168xC3,
        GroupId::H216SL3,
        GroupId::H72SL3,
        GroupId::F36SL3,
        GroupId::A6SL3,
        GroupId::A5,
        GroupId::A5xC3,
    ];

    pub fn key(self) -> &'static str {
        match self {
            GroupId::G168 => "g168",
            GroupId::G168xC3 => "g168xc3",
            GroupId::H216SL3 => "h216",
            GroupId::H72SL3 => "h72",
            GroupId::F36SL3 => "f36",
            GroupId::A6SL3 => "a6",
            GroupId::A5 => "a5",
            GroupId::A5xC3 => "a5xc3",
        }
    }

    /// Cyclotomic conductor holding all generator entries.
    pub fn conductor(self) -> u32 {
        match self {
            GroupId::G168 => 7,
            GroupId::G168xC3 => 21,
            GroupId::H216SL3 | GroupId::H72SL3 | GroupId::F36SL3 => 9,
            GroupId::A5 => 5,
            GroupId::A6SL3 | GroupId::A5xC3 => 15,
        }
    }

    /// The group this one is a direct product with `C_3` of, if any.
    pub fn base(self) -> GroupId {
        match self {
            GroupId::G168xC3 => GroupId::G168,
            GroupId::A5xC3 => GroupId::A5,
            g => g,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for GroupId {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<GroupId, GroupError> {
        let k = s.to_ascii_lowercase().replace(['_', '-'], "");
        let k = k.trim_end_matches("sl3");
        GroupId::ALL
            .into_iter()
            .find(|g| g.key() == k)
            .ok_or_else(|| GroupError::UnknownGroup(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct MatGroup {
    pub id: Option<GroupId>,
    pub conductor: u32,
    pub generators: Vec<(String, Mat)>,
    elements: Option<Vec<Mat>>,
}

fn m3(rows: [[Cyclo; 3]; 3]) -> Mat {
    Mat::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn ci(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

/// Named generator matrices as printed.
pub fn named_matrix(name: &str) -> Option<Mat> {
    use consts::*;
    let one = || ci(1);
    Some(match name {
        "E1" => Mat::diag(vec![one(), xi().pow(4), xi()]),
        "E2" => Mat::from_ints(&[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]),
        "E3" => m3([[one(), ci(2), ci(2)], [one(), s(), t()], [one(), t(), s()]]).scale(&sqrt5().inv().unwrap()),
        "E4" => {
            let l1 = lambda1();
            let l2x2 = lambda2().scale(&Rat::from_integer(2.into()));
            let s15 = s().embed(15).unwrap();
            let t15 = t().embed(15).unwrap();
            m3([
                [one(), l2x2.clone(), l2x2],
                [l1.clone(), s15.clone(), t15.clone()],
                [l1, t15, s15],
            ])
            .scale(&sqrt5().embed(15).unwrap().inv().unwrap())
        }
        "S" => Mat::diag(vec![beta(), beta().pow(2), beta().pow(4)]),
        "R" => m3([[a(), b(), c()], [b(), c(), a()], [c(), a(), b()]]).scale(&sqrt7i().inv().unwrap()),
        "S1" => Mat::diag(vec![one(), omega(), omega().square()]),
        "T" => Mat::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
        "U" => {
            let w = omega().embed(9).unwrap();
            Mat::diag(vec![eps(), eps(), &eps() * &w])
        }
        "V" => {
            let w = omega();
            let w2 = w.square();
            m3([[one(), one(), one()], [one(), w.clone(), w2.clone()], [one(), w2, w]]).scale(&rho())
        }
        "Z" => Mat::scalar(3, &omega()),
        _ => return None,
    })
}

fn generator_names(id: GroupId) -> Vec<&'static str> {
    match id {
        GroupId::G168 => vec!["R", "S", "T"],
        GroupId::G168xC3 => vec!["R", "S", "T", "Z"],
        GroupId::H216SL3 => vec!["S1", "T", "V", "U"],
        GroupId::H72SL3 => vec!["S1", "T", "V", "UVU^-1"],
        GroupId::F36SL3 => vec!["S1", "T", "V"],
        GroupId::A6SL3 => vec!["E1", "E2", "E3", "E4"],
        GroupId::A5 => vec!["E1", "E2", "E3"],
        GroupId::A5xC3 => vec!["E1", "E2", "E3", "Z"],
    }
}

/// The generators of a catalog group exactly as printed, over the group's
/// conductor.
pub fn catalog_generators(id: GroupId) -> MatGroup {
    let m = id.conductor();
    let generators = generator_names(id)
        .into_iter()
        .map(|n| {
            let g = if n == "UVU^-1" {
                let u = named_matrix("U").unwrap();
                let v = named_matrix("V").unwrap();
                u.mul(&v).mul(&u.inv().unwrap())
            } else {
                named_matrix(n).unwrap()
            };
            (n.to_string(), g.embed(m).unwrap())
        })
        .collect();
    MatGroup { id: Some(id), conductor: m, generators, elements: None }
}

/// Coordinate change `C` under which the printed invariant formulas are
/// invariant: the working generators are `C^-1 g C`. `None` means the
/// printed generators are used directly.
pub fn invariant_frame(id: GroupId) -> Option<Mat> {
    match id.base() {
        GroupId::G168 => Some(Mat::from_ints(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])),
        GroupId::A6SL3 => {
            // lambda = (-3 + sqrt(-15)) / 6
            let lam = (Cyclo::from_int(-3) + consts::sqrt15i()).scale(&lode_exactnum::rat(1, 6));
            let z = Cyclo::zero;
            let o = Cyclo::one;
            Some(m3([[z(), z(), lam], [o(), z(), z()], [z(), o(), z()]]))
        }
        _ => None,
    }
}

/// Catalog group expressed in its invariant frame.
pub fn catalog_group(id: GroupId) -> MatGroup {
    let g = catalog_generators(id);
    match invariant_frame(id) {
        Some(c) => g.conjugated(&c),
        None => g,
    }
}

impl MatGroup {
    pub fn new(generators: Vec<(String, Mat)>) -> MatGroup {
        let m = generators.iter().fold(1u32, |m, (_, g)| m.lcm(&g.conductor()));
        let generators = generators.into_iter().map(|(n, g)| (n, g.embed(m).unwrap())).collect();
        MatGroup { id: None, conductor: m, generators, elements: None }
    }

    /// Generators `C^-1 g C`.
    pub fn conjugated(&self, c: &Mat) -> MatGroup {
        let ci = c.inv().expect("frame change must be invertible");
        let m = self.conductor.lcm(&c.conductor());
        let generators = self
            .generators
            .iter()
            .map(|(n, g)| (n.clone(), ci.mul(g).mul(c).embed(m).unwrap()))
            .collect();
        MatGroup { id: self.id, conductor: m, generators, elements: None }
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Enumerates the generated group by breadth-first multiplication.
    pub fn closure(&self, bound: usize) -> Result<MatGroup, GroupError> {
        let n = self.generators.first().map_or(3, |(_, g)| g.size());
        let id = Mat::identity(n).embed(self.conductor)?;
        let mut seen: HashSet<Mat> = HashSet::new();
        let mut order = vec![id.clone()];
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for (_, g) in &self.generators {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    if seen.len() > bound {
                        return Err(GroupError::ClosureBoundExceeded(bound));
                    }
                    order.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(MatGroup { elements: Some(order), ..self.clone() })
    }

    pub fn elements(&self) -> Result<&[Mat], GroupError> {
        self.elements.as_deref().ok_or(GroupError::NotClosed)
    }

    pub fn order(&self) -> Result<usize, GroupError> {
        Ok(self.elements()?.len())
    }

    pub fn scalar_subgroup(&self) -> Result<Vec<Mat>, GroupError> {
        Ok(self.elements()?.iter().filter(|g| g.is_scalar()).cloned().collect())
    }

    pub fn projective_order(&self) -> Result<usize, GroupError> {
        Ok(self.order()? / self.scalar_subgroup()?.len())
    }

    pub fn generators_in_sl3(&self) -> bool {
        self.generators.iter().all(|(_, g)| g.det().is_one())
    }

    pub fn elements_in_sl3(&self) -> Result<bool, GroupError> {
        Ok(self.elements()?.iter().all(|g| g.det().is_one()))
    }

    pub fn is_invariant(&self, f: &MPoly) -> Result<bool, GroupError> {
        for (_, g) in &self.generators {
            if &f.substitute_linear(g)? != f {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Scalars `chi(g)` with `F(X g) = chi(g) F` for each generator.
    pub fn semi_character(&self, f: &MPoly) -> Result<Vec<(String, Cyclo)>, GroupError> {
        let mut out = Vec::new();
        let Some((lead, lc)) = f.terms().next().map(|(e, c)| (e, c.clone())) else {
            return Err(GroupError::NotSemiInvariant("zero polynomial".into()));
        };
        for (name, g) in &self.generators {
            let img = f.substitute_linear(g)?;
            let chi = img.coeff(&lead).try_div(&lc)?;
            if img != f.scale(&chi) {
                return Err(GroupError::NotSemiInvariant(name.clone()));
            }
            out.push((name.clone(), chi));
        }
        Ok(out)
    }

    /// `dim C[X]^G_d` for `d = 0..=up_to` by Molien's formula.
    pub fn molien(&self, up_to: usize) -> Result<Vec<u64>, GroupError> {
        let els = self.elements()?;
        let mut classes: HashMap<(Cyclo, Cyclo, Cyclo), u64> = HashMap::new();
        for g in els {
            let tr = g.trace();
            let e2 = principal_minor_sum(g);
            let d = g.det();
            *classes.entry((tr, e2, d)).or_insert(0) += 1;
        }
        let mut total = vec![Cyclo::zero(); up_to + 1];
        for ((tr, e2, d), count) in classes {
            let mut c: Vec<Cyclo> = Vec::with_capacity(up_to + 1);
            for k in 0..=up_to {
                let mut v = if k == 0 { Cyclo::one() } else { &tr * &c[k - 1] };
                if k >= 2 {
                    v = &v - &(&e2 * &c[k - 2]);
                }
                if k >= 3 {
                    v = &v + &(&d * &c[k - 3]);
                }
                c.push(v);
            }
            for (t, v) in total.iter_mut().zip(c) {
                *t = &*t + &v.scale(&Rat::from_integer(count.into()));
            }
        }
        let n = Rat::from_integer(els.len().into());
        total
            .into_iter()
            .map(|v| {
                let r = v.to_rat().expect("Molien coefficient must be rational") / &n;
                assert!(r.is_integer(), "Molien coefficient must be integral");
                Ok(u64::try_from(r.to_integer()).expect("nonnegative Molien coefficient"))
            })
            .collect()
    }
}

fn principal_minor_sum(g: &Mat) -> Cyclo {
    let n = g.size();
    let mut acc = Cyclo::zero();
    for i in 0..n {
        for j in i + 1..n {
            let m = &(g.get(i, i) * g.get(j, j)) - &(g.get(i, j) * g.get(j, i));
            acc = &acc + &m;
        }
    }
    acc
}
