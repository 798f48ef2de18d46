//! Command-line driver for `jgl-core`: JSON documents, report emission and
//! the acceptance suites.

pub mod cli;
pub mod json;
pub mod output;
pub mod suites;

use jgl_core::catalog;
use jgl_core::liealg::GradedLieAlgebra;
use jgl_core::{Error, Ring};

/// Environment variable capping every enumeration.
pub const MAX_ENUM_VAR: &str = "JGL_MAX_ENUM";

/// `JGL_MAX_ENUM`, or the default cap when unset.
pub fn max_enum() -> Result<u64, String> {
    match std::env::var(MAX_ENUM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_ENUM_VAR} must be a positive integer, got `{v}`")),
        Err(_) => Ok(jgl_core::DEFAULT_MAX_ENUM),
    }
}

/// Graded Lie algebras known by name:
///
/// * `sl2`: the 3-graded sl(2)
/// * `gl2`, `gl3`: gl(n) 3-graded by blocks (1,1) and (1,2); `gl:a,b` in general
/// * `gl3-5`: gl(3) with the 5-grading from diag(1,0,−1); `glw:w1,w2,…` in general
pub fn named_algebra(name: &str, ring: Ring) -> Result<GradedLieAlgebra, Error> {
    let ints = |s: &str| -> Result<Vec<i32>, Error> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Invalid(format!("bad integer `{t}` in `{name}`")))
            })
            .collect()
    };
    match name {
        "sl2" => Ok(catalog::sl2(ring)),
        "gl2" => catalog::gl_3graded(1, 1, ring),
        "gl3" => catalog::gl_3graded(1, 2, ring),
        "gl3-5" => Ok(catalog::gl_graded(&[1, 0, -1], ring)),
        _ => {
            if let Some(rest) = name.strip_prefix("gl:") {
                match ints(rest)?.as_slice() {
                    &[a, b] if a > 0 && b > 0 => catalog::gl_3graded(a as usize, b as usize, ring),
                    _ => Err(Error::Invalid(format!(
                        "`{name}`: expected gl:a,b with a, b >= 1"
                    ))),
                }
            } else if let Some(rest) = name.strip_prefix("glw:") {
                Ok(catalog::gl_graded(&ints(rest)?, ring))
            } else {
                Err(Error::Invalid(format!(
                    "unknown algebra `{name}` (sl2, gl2, gl3, gl3-5, gl:a,b, glw:w1,...)"
                )))
            }
        }
    }
}
