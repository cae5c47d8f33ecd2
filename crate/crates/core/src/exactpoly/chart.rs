use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// An ordered list of coordinate names on a polynomial chart.
///
/// The empty chart is legal and stands for a one-point base.
#[derive(Clone)]
pub struct Chart {
    coords: Arc<[String]>,
}

/// True when `name` matches `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Chart {
    pub fn new<I, S>(coords: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let coords: Vec<String> = coords.into_iter().map(Into::into).collect();
        for (i, name) in coords.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::BadCoordinateName(name.clone()));
            }
            if coords[..i].contains(name) {
                return Err(PolyError::DuplicateCoordinate(name.clone()));
            }
        }
        Ok(Chart { coords: coords.into() })
    }

    /// The zero-dimensional chart.
    pub fn point() -> Self {
        Chart { coords: Arc::from(Vec::new()) }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn name(&self, index: usize) -> &str {
        &self.coords[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.coords.iter().position(|c| c == name)
    }
}

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.coords, &other.coords) || self.coords == other.coords
    }
}

impl Eq for Chart {}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chart({})", self.coords.join(","))
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.join(", "))
    }
}
