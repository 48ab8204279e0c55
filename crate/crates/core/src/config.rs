//! Labeled point configurations and their JSON file format.

use serde::{Deserialize, Serialize};

use crate::error::{KneserError, Result};
use crate::exact::{format_scalar, parse_scalar, Scalar, Vector};

/// An ordered list of `n ≥ 1` points in R^d. The point at position `i` has
/// label `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    d: usize,
    points: Vec<Vector>,
}

#[derive(Serialize, Deserialize)]
struct ConfigFile {
    d: usize,
    points: Vec<Vec<String>>,
}

impl PointConfig {
    pub fn new(d: usize, points: Vec<Vector>) -> Result<Self> {
        if d == 0 {
            return Err(KneserError::invalid("ambient dimension must be at least 1"));
        }
        if points.is_empty() {
            return Err(KneserError::invalid("a configuration needs at least one point"));
        }
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
            return Err(KneserError::invalid(format!(
                "point {} has {} coordinates, expected {d}",
                i + 1,
                p.len()
            )));
        }
        Ok(PointConfig { d, points })
    }

    /// Integer configuration; convenient for fixtures and tests.
    pub fn from_ints(d: usize, points: &[&[i64]]) -> Result<Self> {
        PointConfig::new(d, points.iter().map(|p| crate::exact::int_vec(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    /// The point carrying 1-based `label`.
    pub fn point(&self, label: usize) -> &Vector {
        &self.points[label - 1]
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> {
        1..=self.points.len()
    }

    /// Points for a list of labels, in the given order.
    pub fn select(&self, labels: &[usize]) -> Vec<Vector> {
        labels.iter().map(|&l| self.point(l).clone()).collect()
    }

    /// Sub-configuration on `labels`; the result is relabeled 1..len.
    pub fn restrict(&self, labels: &[usize]) -> Result<PointConfig> {
        PointConfig::new(self.d, self.select(labels))
    }

    /// The configuration without the point of `label`.
    pub fn delete(&self, label: usize) -> Result<PointConfig> {
        let keep: Vec<usize> = self.labels().filter(|&l| l != label).collect();
        self.restrict(&keep)
    }

    pub fn with_point(&self, p: Vector) -> Result<PointConfig> {
        let mut points = self.points.clone();
        points.push(p);
        PointConfig::new(self.d, points)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ConfigFile = serde_json::from_str(text)?;
        let points = file
            .points
            .iter()
            .map(|p| p.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<Scalar>>>())
            .collect::<Result<Vec<_>>>()?;
        PointConfig::new(file.d, points)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = ConfigFile {
            d: self.d,
            points: self.points.iter().map(|p| p.iter().map(format_scalar).collect()).collect(),
        };
        serde_json::to_value(file).expect("config serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("config serializes")
    }
}
