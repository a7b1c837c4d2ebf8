//! Reference data compiled into the library.

pub const APPENDIX_SIGMA: &str = include_str!("../../../fixtures/appendix_sigma.tvec");
pub const APPENDIX_CUBIC: &str = include_str!("../../../fixtures/appendix_cubic.poly");
pub const TABLE1: &str = include_str!("../../../fixtures/table1.fixture");

use crate::error::Result;
use crate::poly::text::parse_poly;
use crate::poly::{MultiPoly, Rationals};

/// A polynomial file: `#` comments, the polynomial itself possibly spread over several lines.
pub fn parse_poly_file(text: &str, nvars: usize) -> Result<MultiPoly<Rationals>> {
    let body: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    parse_poly(Rationals, nvars, &body.join(" "))
}

pub fn appendix_cubic() -> MultiPoly<Rationals> {
    parse_poly_file(APPENDIX_CUBIC, 6).expect("embedded cubic parses")
}
