//! Torus bundles over closed surfaces, presented by monodromy and Euler class.
//!
//! Monodromy matrices act on column vectors from the left. The fiber basis is
//! `x1 = (1, 0)`, `x2 = (0, 1)`, and the Euler pair `(m, n)` is the vector
//! `m x1 + n x2` in that basis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactla::{canonical_basis, integer_kernel, IntMatrix};

/// An element of `SL(2, Z)`, stored as `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SL2Z {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl SL2Z {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Error::Validation {
                field: "matrix".into(),
                message: format!("determinant is {det}, expected 1"),
            });
        }
        Ok(SL2Z { a, b, c, d })
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Result<Self> {
        SL2Z::new(
            m[0][0].into(),
            m[0][1].into(),
            m[1][0].into(),
            m[1][1].into(),
        )
    }

    pub fn identity() -> Self {
        SL2Z {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `[[1, 1], [0, 1]]`
    pub fn upper_unipotent() -> Self {
        SL2Z {
            a: BigInt::one(),
            b: BigInt::one(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// `[[1, 0], [1, 1]]`
    pub fn lower_unipotent() -> Self {
        SL2Z {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::one(),
        }
    }

    /// Quarter turn `[[0, -1], [1, 0]]`.
    pub fn rotation() -> Self {
        SL2Z {
            a: BigInt::zero(),
            b: -BigInt::one(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    pub fn entries(&self) -> [[&BigInt; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }

    pub fn is_identity(&self) -> bool {
        *self == SL2Z::identity()
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> SL2Z {
        SL2Z {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn mul(&self, rhs: &SL2Z) -> SL2Z {
        SL2Z {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    /// `self * rhs * self^{-1}`
    pub fn conjugate(&self, rhs: &SL2Z) -> SL2Z {
        self.mul(rhs).mul(&self.inverse())
    }

    /// Commutator `a b a^{-1} b^{-1}`.
    pub fn commutator(a: &SL2Z, b: &SL2Z) -> SL2Z {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn apply(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &self.a * &v[0] + &self.b * &v[1],
            &self.c * &v[0] + &self.d * &v[1],
        ]
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_vec(
            2,
            2,
            vec![
                self.a.clone(),
                self.b.clone(),
                self.c.clone(),
                self.d.clone(),
            ],
        )
    }

    /// `A - I` as a 2x2 integer matrix.
    pub fn minus_identity(&self) -> IntMatrix {
        self.to_matrix().sub(&IntMatrix::identity(2))
    }
}

impl fmt::Display for SL2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// A torus bundle over the closed genus-`g` surface.
///
/// `monodromy[2i]` and `monodromy[2i + 1]` are the images of `a_{i+1}` and
/// `b_{i+1}` in the standard generating set of the surface group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusBundle {
    genus: usize,
    monodromy: Vec<SL2Z>,
    euler: [BigInt; 2],
}

impl TorusBundle {
    pub fn new(genus: usize, monodromy: Vec<SL2Z>, euler: [BigInt; 2]) -> Result<Self> {
        if genus < 2 {
            return Err(Error::Validation {
                field: "genus".into(),
                message: format!("must be at least 2, got {genus}"),
            });
        }
        if monodromy.len() != 2 * genus {
            return Err(Error::Validation {
                field: "monodromy".into(),
                message: format!(
                    "expected {} matrices for genus {genus}, got {}",
                    2 * genus,
                    monodromy.len()
                ),
            });
        }
        Ok(TorusBundle {
            genus,
            monodromy,
            euler,
        })
    }

    /// Bundle with trivial monodromy and the given Euler class.
    pub fn principal(genus: usize, m: i64, n: i64) -> Result<Self> {
        TorusBundle::new(
            genus,
            vec![SL2Z::identity(); 2 * genus],
            [m.into(), n.into()],
        )
    }

    /// Bundle whose first monodromy matrix is `first` and the rest trivial.
    pub fn with_first_monodromy(genus: usize, first: SL2Z, m: i64, n: i64) -> Result<Self> {
        let mut mono = vec![SL2Z::identity(); 2 * genus];
        if let Some(slot) = mono.first_mut() {
            *slot = first;
        }
        TorusBundle::new(genus, mono, [m.into(), n.into()])
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn monodromy(&self) -> &[SL2Z] {
        &self.monodromy
    }

    pub fn euler(&self) -> &[BigInt; 2] {
        &self.euler
    }

    pub fn is_flat(&self) -> bool {
        self.euler.iter().all(Zero::is_zero)
    }

    pub fn has_trivial_monodromy(&self) -> bool {
        self.monodromy.iter().all(SL2Z::is_identity)
    }

    /// Same monodromy, Euler class zero.
    pub fn flat_twin(&self) -> TorusBundle {
        TorusBundle {
            genus: self.genus,
            monodromy: self.monodromy.clone(),
            euler: [BigInt::zero(), BigInt::zero()],
        }
    }

    /// The same bundle written in the fiber basis changed by `p`: every
    /// monodromy matrix becomes `p A p^{-1}` and the Euler vector becomes `p e`.
    pub fn change_fiber_basis(&self, p: &SL2Z) -> TorusBundle {
        TorusBundle {
            genus: self.genus,
            monodromy: self.monodromy.iter().map(|a| p.conjugate(a)).collect(),
            euler: p.apply(&self.euler),
        }
    }

    /// Whether `[A1,B1]...[Ag,Bg] = I`, i.e. the monodromy tuple defines a
    /// representation of the surface group.
    pub fn satisfies_surface_relation(&self) -> bool {
        surface_relator_image(&self.monodromy).is_identity()
    }

    /// The `2 x 4g` matrix whose columns are `(A_i - I) x_1`, `(A_i - I) x_2`.
    pub fn monodromy_relations(&self) -> IntMatrix {
        let mut r = IntMatrix::zeros(2, 4 * self.genus);
        for (i, a) in self.monodromy.iter().enumerate() {
            r.set_block(0, 2 * i, &a.minus_identity());
        }
        r
    }

    pub fn euler_column(&self) -> IntMatrix {
        IntMatrix::from_vec(2, 1, self.euler.to_vec())
    }
}

/// Image of the relator `[a_1,b_1]...[a_g,b_g]` under the monodromy.
pub fn surface_relator_image(monodromy: &[SL2Z]) -> SL2Z {
    monodromy
        .chunks(2)
        .fold(SL2Z::identity(), |acc, pair| match pair {
            [a, b] => acc.mul(&SL2Z::commutator(a, b)),
            _ => acc,
        })
}

/// A saturated sublattice of `Z^2` with a canonical primitive basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: Vec<[BigInt; 2]>,
}

impl Lattice {
    /// Saturation of the lattice spanned by the given columns (2 rows).
    pub fn saturation_of_span(columns: &IntMatrix) -> Lattice {
        assert_eq!(columns.rows(), 2);
        // The saturation is the annihilator of the annihilator.
        let annihilator = integer_kernel(&columns.transpose());
        Lattice::from_basis_matrix(&integer_kernel(&annihilator.transpose()))
    }

    fn from_basis_matrix(m: &IntMatrix) -> Lattice {
        let canon = canonical_basis(2, m.columns());
        let basis = canon
            .columns()
            .into_iter()
            .map(|c| [c[0].clone(), c[1].clone()])
            .collect();
        Lattice { basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[[BigInt; 2]] {
        &self.basis
    }

    /// Primitive generator when the rank is 1.
    pub fn generator(&self) -> Option<&[BigInt; 2]> {
        match self.basis.as_slice() {
            [z] => Some(z),
            _ => None,
        }
    }

    pub fn contains(&self, v: &[BigInt; 2]) -> bool {
        match self.basis.as_slice() {
            [] => v.iter().all(Zero::is_zero),
            [z] => (&z[0] * &v[1] - &z[1] * &v[0]).is_zero(),
            _ => true,
        }
    }
}

/// `{z : A_i z = z for all i}`.
pub fn fixed_sublattice(bundle: &TorusBundle) -> Lattice {
    let mut stacked = IntMatrix::zeros(2 * bundle.monodromy.len(), 2);
    for (i, a) in bundle.monodromy.iter().enumerate() {
        stacked.set_block(2 * i, 0, &a.minus_identity());
    }
    Lattice::from_basis_matrix(&integer_kernel(&stacked))
}

/// Saturation of `S = <A_i x_1 - x_1, A_i x_2 - x_2>`.
pub fn s_sublattice(bundle: &TorusBundle) -> Lattice {
    Lattice::saturation_of_span(&bundle.monodromy_relations())
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

/// Parses the JSON bundle description
/// `{"genus": g, "monodromy": [[[a,b],[c,d]], ...], "euler": [m, n]}`.
pub fn parse_bundle(text: &str) -> Result<TorusBundle> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        field: "document".into(),
        message: e.to_string(),
    })?;
    let obj = value.as_object().ok_or_else(|| Error::Parse {
        field: "document".into(),
        message: "expected a JSON object".into(),
    })?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "genus" | "monodromy" | "euler") {
            return Err(Error::Parse {
                field: key.clone(),
                message: "unknown key".into(),
            });
        }
    }
    let field = |name: &str| {
        obj.get(name).ok_or_else(|| Error::Parse {
            field: name.into(),
            message: "missing key".into(),
        })
    };

    let genus_big = parse_int(field("genus")?, "genus")?;
    if genus_big < BigInt::from(2) {
        return Err(Error::Validation {
            field: "genus".into(),
            message: format!("must be at least 2, got {genus_big}"),
        });
    }
    let genus: usize = usize::try_from(&genus_big).map_err(|_| Error::Validation {
        field: "genus".into(),
        message: format!("{genus_big} is too large"),
    })?;

    let mono_value = field("monodromy")?;
    let mono_list = mono_value.as_array().ok_or_else(|| Error::Parse {
        field: "monodromy".into(),
        message: "expected an array of 2x2 matrices".into(),
    })?;
    let mut monodromy = Vec::with_capacity(mono_list.len());
    for (i, entry) in mono_list.iter().enumerate() {
        let name = format!("monodromy[{i}]");
        let rows = parse_pair(entry, &name)?;
        let [r0, r1] = rows;
        let [a, b] = parse_pair(r0, &format!("{name}[0]"))?;
        let [c, d] = parse_pair(r1, &format!("{name}[1]"))?;
        let a = parse_int(a, &format!("{name}[0][0]"))?;
        let b = parse_int(b, &format!("{name}[0][1]"))?;
        let c = parse_int(c, &format!("{name}[1][0]"))?;
        let d = parse_int(d, &format!("{name}[1][1]"))?;
        let m = SL2Z::new(a, b, c, d).map_err(|e| match e {
            Error::Validation { message, .. } => Error::Validation {
                field: name.clone(),
                message,
            },
            other => other,
        })?;
        monodromy.push(m);
    }

    let [m, n] = parse_pair(field("euler")?, "euler")?;
    let euler = [parse_int(m, "euler[0]")?, parse_int(n, "euler[1]")?];
    TorusBundle::new(genus, monodromy, euler)
}

fn parse_pair<'a>(v: &'a Value, field: &str) -> Result<[&'a Value; 2]> {
    match v.as_array().map(Vec::as_slice) {
        Some([x, y]) => Ok([x, y]),
        _ => Err(Error::Parse {
            field: field.into(),
            message: "expected an array of length 2".into(),
        }),
    }
}

fn parse_int(v: &Value, field: &str) -> Result<BigInt> {
    let bad = || Error::Parse {
        field: field.into(),
        message: format!("expected an integer, got {v}"),
    };
    match v {
        Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// Canonical single-line JSON rendering, accepted by [`parse_bundle`].
pub fn serialize_bundle(bundle: &TorusBundle) -> String {
    let mono: Vec<String> = bundle.monodromy.iter().map(SL2Z::to_string).collect();
    format!(
        "{{\"genus\":{},\"monodromy\":[{}],\"euler\":[{},{}]}}",
        bundle.genus,
        mono.join(","),
        bundle.euler[0],
        bundle.euler[1]
    )
}

impl fmt::Display for TorusBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_bundle(self))
    }
}

/// True when `v` is the zero vector or an integer multiple of `z`.
pub fn is_multiple_of(v: &[BigInt; 2], z: &[BigInt; 2]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if z.iter().all(Zero::is_zero) {
        return false;
    }
    let parallel = (&z[0] * &v[1] - &z[1] * &v[0]).is_zero();
    let i = if z[0].is_zero() { 1 } else { 0 };
    parallel && (&v[i] % &z[i]).is_zero()
}
