//! Derivations `(D, V)` of an algebroid and the Lie algebra `Der(𝔤)`.
//!
//! A derivation is stored as its action on the frame, `D(eᵢ) = Σⱼ dʲᵢ eⱼ`,
//! together with the base vector field `V`. On general sections `D` is the
//! Leibniz extension `D(f·s) = f·D(s) + V(f)·s`, so axiom (ii) holds by
//! construction; axioms (i) and (iii) are checked on the frame.

use crate::algebroid::{Algebroid, AlgebroidError, RandomSections, Section};
use crate::exactpoly::{Poly, PolyError, VectorField};
use crate::report::{CheckItem, CheckReport, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    /// `matrix[j][i] = dʲᵢ`; column `i` is `D(eᵢ)`.
    matrix: Vec<Vec<Poly>>,
    field: VectorField,
}

/// Seed of the axiom (ii) self-test.
const SELF_TEST_SEED: u64 = 0x5eed;
const SELF_TEST_PAIRS: usize = 5;

impl Derivation {
    pub fn new(alg: &Algebroid, matrix: Vec<Vec<Poly>>, field: VectorField) -> Result<Self, AlgebroidError> {
        let r = alg.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(AlgebroidError::Shape(format!("derivation matrix must be {r}×{r}")));
        }
        if field.chart() != alg.base() {
            return Err(
                PolyError::ChartMismatch { left: alg.base().to_string(), right: field.chart().to_string() }.into()
            );
        }
        if let Some(bad) = matrix.iter().flatten().find(|p| p.chart() != alg.base()) {
            return Err(
                PolyError::ChartMismatch { left: alg.base().to_string(), right: bad.chart().to_string() }.into()
            );
        }
        Ok(Derivation { matrix, field })
    }

    pub fn zero(alg: &Algebroid) -> Self {
        let r = alg.rank();
        Derivation { matrix: vec![vec![Poly::zero(alg.base()); r]; r], field: VectorField::zero(alg.base()) }
    }

    /// Builds the derivation from its frame images `D(eᵢ)`.
    pub fn from_columns(alg: &Algebroid, columns: &[Section], field: VectorField) -> Result<Self, AlgebroidError> {
        let r = alg.rank();
        if columns.len() != r {
            return Err(AlgebroidError::Shape(format!("expected {r} frame images, got {}", columns.len())));
        }
        for c in columns {
            alg.check_section(c)?;
        }
        let matrix = (0..r).map(|j| (0..r).map(|i| columns[i].coeffs()[j].clone()).collect()).collect();
        Derivation::new(alg, matrix, field)
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.matrix
    }

    pub fn field(&self) -> &VectorField {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// `D(eᵢ)`.
    pub fn column(&self, i: usize) -> Section {
        Section::new(self.matrix.iter().map(|row| row[i].clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero() && self.matrix.iter().flatten().all(Poly::is_zero)
    }

    fn ensure_fits(&self, alg: &Algebroid) -> Result<(), AlgebroidError> {
        if self.rank() != alg.rank() || self.field.chart() != alg.base() {
            return Err(AlgebroidError::SectionMismatch("derivation belongs to another algebroid".into()));
        }
        Ok(())
    }

    /// Coefficient `j` of the result is `Σᵢ fᵢ dʲᵢ + V(fⱼ)`.
    pub fn apply(&self, alg: &Algebroid, s: &Section) -> Result<Section, AlgebroidError> {
        self.ensure_fits(alg)?;
        alg.check_section(s)?;
        let f = s.coeffs();
        let out = self
            .matrix
            .iter()
            .zip(f)
            .map(|(row, fj)| {
                let mut acc = self.field.apply(fj)?;
                for (fi, d) in f.iter().zip(row) {
                    if !fi.is_zero() && !d.is_zero() {
                        acc = &acc + &(fi * d);
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Section::new(out))
    }

    /// `ad(s) = [s, −]` with base field `ρ(s)`.
    pub fn inner(alg: &Algebroid, s: &Section) -> Result<Self, AlgebroidError> {
        let columns =
            (0..alg.rank()).map(|i| alg.bracket(s, &Section::basis(alg, i))).collect::<Result<Vec<_>, _>>()?;
        let field = alg.anchor_of(s)?;
        Derivation::from_columns(alg, &columns, field)
    }

    /// `[(D,V),(D′,V′)] = (D∘D′ − D′∘D, [V,V′])`, normalized to frame form.
    pub fn bracket(&self, other: &Derivation, alg: &Algebroid) -> Result<Self, AlgebroidError> {
        self.ensure_fits(alg)?;
        other.ensure_fits(alg)?;
        let columns = (0..alg.rank())
            .map(|i| {
                let a = self.apply(alg, &other.column(i))?;
                let b = other.apply(alg, &self.column(i))?;
                Ok(a.sub(&b))
            })
            .collect::<Result<Vec<_>, AlgebroidError>>()?;
        let field = self.field.bracket(&other.field)?;
        Derivation::from_columns(alg, &columns, field)
    }

    /// `(f·D, f·V)`.
    pub fn scale(&self, f: &Poly) -> Result<Self, PolyError> {
        Ok(Derivation {
            matrix: self.matrix.iter().map(|row| row.iter().map(|d| f * d).collect()).collect(),
            field: self.field.scale(f)?,
        })
    }

    pub fn add(&self, other: &Derivation) -> Result<Self, PolyError> {
        Ok(Derivation {
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
            field: self.field.checked_add(&other.field)?,
        })
    }

    pub fn sub(&self, other: &Derivation) -> Result<Self, PolyError> {
        self.add(&other.scale(&-Poly::one(self.field.chart()))?)
    }

    /// Axiom (i) on frame pairs: `D[eᵢ,eⱼ] − [Deᵢ,eⱼ] − [eᵢ,Deⱼ]`, first nonzero residual.
    pub fn bracket_defect(&self, alg: &Algebroid) -> Result<Option<Witness>, AlgebroidError> {
        let basis: Vec<Section> = (0..alg.rank()).map(|i| Section::basis(alg, i)).collect();
        let images: Vec<Section> = (0..alg.rank()).map(|i| self.column(i)).collect();
        for i in 0..alg.rank() {
            for j in i + 1..alg.rank() {
                let lhs = self.apply(alg, &alg.bracket(&basis[i], &basis[j])?)?;
                let rhs = alg.bracket(&images[i], &basis[j])?.add(&alg.bracket(&basis[i], &images[j])?);
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    return Ok(Some(Witness::new(vec![i + 1, j + 1], r.render())));
                }
            }
        }
        Ok(None)
    }

    /// Axiom (iii) on the frame: `ρ(D eᵢ) − [V, ρ(eᵢ)]`.
    pub fn anchor_defect(&self, alg: &Algebroid) -> Result<Option<Witness>, AlgebroidError> {
        for i in 0..alg.rank() {
            let lhs = alg.anchor_of(&self.column(i))?;
            let rhs = self.field.bracket(alg.anchor_row(i))?;
            let r = lhs.checked_sub(&rhs)?;
            if !r.is_zero() {
                return Ok(Some(Witness::new(vec![i + 1], r.render())));
            }
        }
        Ok(None)
    }

    /// Axiom (ii) on random `(f, s)`: `D(f s) − f D(s) − V(f) s`.
    pub fn leibniz_defect(&self, alg: &Algebroid) -> Result<Option<Witness>, AlgebroidError> {
        let mut rng = RandomSections::new(SELF_TEST_SEED);
        for trial in 0..SELF_TEST_PAIRS {
            let f = rng.poly(alg.base(), 2);
            let s = rng.section(alg, 2);
            let lhs = self.apply(alg, &s.scale(&f))?;
            let rhs = self.apply(alg, &s)?.scale(&f).add(&s.scale(&self.field.apply(&f)?));
            let r = lhs.sub(&rhs);
            if !r.is_zero() {
                return Ok(Some(Witness::new(vec![trial + 1], r.render())));
            }
        }
        Ok(None)
    }

    /// Items `derivation_i`, `derivation_ii`, `derivation_iii`.
    pub fn check_items(&self, alg: &Algebroid) -> Result<Vec<CheckItem>, AlgebroidError> {
        self.ensure_fits(alg)?;
        Ok(vec![
            CheckItem::from_witness("derivation_i", self.bracket_defect(alg)?),
            CheckItem::from_witness("derivation_ii", self.leibniz_defect(alg)?),
            CheckItem::from_witness("derivation_iii", self.anchor_defect(alg)?),
        ])
    }

    pub fn check(&self, alg: &Algebroid, subject: &str) -> Result<CheckReport, AlgebroidError> {
        Ok(CheckReport::new(subject, self.check_items(alg)?))
    }
}
