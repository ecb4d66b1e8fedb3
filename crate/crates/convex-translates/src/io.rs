//! JSON file schemas for bodies, arrangements and report digests.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::body::{Angle, BodyError, SupportBody, SupportFunction, Vec2};
use crate::intersection::{Arrangement, IntersectError};

/// On-disk body: `{"a0", "harmonics": [[a_k, b_k], ...], "center", "rotation"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BodyFile {
    pub a0: f64,
    #[serde(default)]
    pub harmonics: Vec<(f64, f64)>,
    #[serde(default)]
    pub center: [f64; 2],
    #[serde(default)]
    pub rotation: f64,
}

impl BodyFile {
    pub fn to_body(&self) -> Result<SupportBody, BodyError> {
        SupportBody::with_rotation(
            SupportFunction::new(self.a0, self.harmonics.clone()),
            Vec2::new(self.center[0], self.center[1]),
            Angle::new(self.rotation),
        )
    }

    pub fn from_body(b: &SupportBody) -> BodyFile {
        BodyFile {
            a0: b.shape().a0,
            harmonics: b.shape().coefficients.clone(),
            center: [b.center().x, b.center().y],
            rotation: b.rotation().radians(),
        }
    }
}

/// Body schema without a placement: the shared shape of an arrangement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShapeFile {
    pub a0: f64,
    #[serde(default)]
    pub harmonics: Vec<(f64, f64)>,
    #[serde(default)]
    pub rotation: f64,
}

/// On-disk arrangement: `{"body": <shape>, "translations": [[x, y], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub body: ShapeFile,
    pub translations: Vec<[f64; 2]>,
}

impl ArrangementFile {
    pub fn to_arrangement(&self) -> Result<Arrangement, IntersectError> {
        Arrangement::with_rotation(
            SupportFunction::new(self.body.a0, self.body.harmonics.clone()),
            Angle::new(self.body.rotation),
            self.translations
                .iter()
                .map(|t| Vec2::new(t[0], t[1]))
                .collect(),
        )
    }

    pub fn from_arrangement(arr: &Arrangement) -> ArrangementFile {
        ArrangementFile {
            body: ShapeFile {
                a0: arr.shape().a0,
                harmonics: arr.shape().coefficients.clone(),
                rotation: arr.rotation().radians(),
            },
            translations: arr.translations().iter().map(|t| [t.x, t.y]).collect(),
        }
    }
}

/// Hex SHA-256 of a serialized artifact, used as a stable arrangement id in
/// reports.
pub fn digest(json: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn body_round_trip() {
        let json = r#"{"a0": 1.5, "harmonics": [[0.0, 0.0], [0.1, -0.05]], "center": [0.5, -1.0], "rotation": 0.25}"#;
        let file: BodyFile = serde_json::from_str(json).unwrap();
        let body = file.to_body().unwrap();
        assert_eq!(body.center(), Vec2::new(0.5, -1.0));
        let back = BodyFile::from_body(&body);
        assert_eq!(back.harmonics, vec![(0.0, 0.0), (0.1, -0.05)]);
        let reparsed: BodyFile =
            serde_json::from_str(&serde_json::to_string(&back).unwrap()).unwrap();
        assert_eq!(reparsed.a0, 1.5);
    }

    #[test]
    fn arrangement_file_round_trip() {
        let json = r#"{"body": {"a0": 1.0, "harmonics": []}, "translations": [[0,0],[1,0]]}"#;
        let file: ArrangementFile = serde_json::from_str(json).unwrap();
        let arr = file.to_arrangement().unwrap();
        assert_eq!(arr.n(), 2);
        let back = ArrangementFile::from_arrangement(&arr);
        assert_eq!(back.translations, vec![[0.0, 0.0], [1.0, 0.0]]);
    }

    #[test]
    fn digest_is_stable() {
        let d = digest("hello");
        assert_eq!(d.len(), 64);
        assert_eq!(d, digest("hello"));
        assert_ne!(d, digest("hello!"));
    }
}
