//! Flat-file descriptions of a system and twist, as consumed by the CLI.
//!
//! The format is JSON: `rank`, a full `matrix` of bond orders with 0
//! encoding the infinite bond, an optional 1-based `theta` permutation
//! (identity when absent), and an optional display `name`.

use crate::error::{Error, Result};
use crate::matrix::{Automorphism, CoxeterMatrix, Generator};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemFile {
    pub rank: usize,
    pub matrix: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl SystemFile {
    /// Parse and validate a JSON description.
    pub fn parse(text: &str) -> Result<SystemFile> {
        let file: SystemFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidWord(format!("malformed system file: {e}")))?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<()> {
        if self.matrix.len() != self.rank {
            return Err(Error::InvalidMatrix(format!(
                "declared rank {} but matrix has {} rows",
                self.rank,
                self.matrix.len()
            )));
        }
        self.coxeter_matrix()?;
        self.automorphism()?;
        Ok(())
    }

    pub fn coxeter_matrix(&self) -> Result<CoxeterMatrix> {
        CoxeterMatrix::from_rows(&self.matrix)
    }

    /// The declared twist, or the identity when absent.
    pub fn automorphism(&self) -> Result<Automorphism> {
        let matrix = self.coxeter_matrix()?;
        match &self.theta {
            None => Ok(Automorphism::identity(self.rank)),
            Some(images) => {
                if images.len() != self.rank {
                    return Err(Error::InvalidAutomorphism(format!(
                        "theta lists {} images for rank {}",
                        images.len(),
                        self.rank
                    )));
                }
                let mut zero_based = Vec::with_capacity(images.len());
                for &image in images {
                    if image == 0 || image > self.rank {
                        return Err(Error::GeneratorOutOfRange {
                            found: image,
                            rank: self.rank,
                        });
                    }
                    zero_based.push((image - 1) as Generator);
                }
                Automorphism::new(zero_based, &matrix)
            }
        }
    }

    /// Display name: the declared one, else a fallback label.
    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("rank-{}", self.rank))
    }
}
