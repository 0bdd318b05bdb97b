use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{build_mother, lift, CodeParams, LiftedCode, SlopeSequence};

/// Compact persistent form of a lifted DC-LDPC code: `{a,b,c,m,slopes}`.
///
/// Slopes use top anchoring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub m: usize,
    pub slopes: Vec<usize>,
}

impl CodeDescriptor {
    pub fn new(params: CodeParams, seq: &SlopeSequence) -> Self {
        CodeDescriptor {
            a: params.a(),
            b: params.b(),
            c: params.c(),
            m: seq.m(),
            slopes: seq.slopes().to_vec(),
        }
    }

    pub fn from_code(code: &LiftedCode) -> Self {
        Self::new(code.mother().params(), &code.slopes())
    }

    pub fn params(&self) -> Result<CodeParams> {
        CodeParams::new(self.a, self.b, self.c)
    }

    pub fn sequence(&self) -> Result<SlopeSequence> {
        SlopeSequence::new(self.m, self.slopes.iter().copied())
    }

    pub fn to_code(&self) -> Result<LiftedCode> {
        let mother = build_mother(self.params()?)?;
        lift(&mother, &self.sequence()?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        fs::write(path, self.to_json() + "\n").map_err(|e| Error::io(path, e))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_json_layout() {
        let params = CodeParams::new(2, 1, 1).unwrap();
        let seq = SlopeSequence::new(5, [0, 1, 3]).unwrap();
        let d = CodeDescriptor::new(params, &seq);
        assert_eq!(d.to_json(), r#"{"a":2,"b":1,"c":1,"m":5,"slopes":[0,1,3]}"#);
        let back = CodeDescriptor::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_code().unwrap().len(), 15);
    }

    #[test]
    fn rejects_bad_descriptors() {
        let d = CodeDescriptor::from_json(r#"{"a":1,"b":1,"c":1,"m":5,"slopes":[]}"#).unwrap();
        assert!(d.to_code().is_err());
        assert!(CodeDescriptor::from_json("{").is_err());
    }
}
