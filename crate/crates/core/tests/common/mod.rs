#![allow(dead_code)]

use canal_core::matrec::SquaredMAT;
use canal_core::parse::{parse_rational_function, parse_surface_expression};
use canal_core::qpoly::{MPoly, Rat};
use canal_core::sqrtfield::RatFunc;

pub const EXAMPLE1: &str = "x^3+x*y^2+x*z^2+2*x^2+3*y^2+z^2-5*x-6";

pub const EXAMPLE2: &str = "256x^6+768x^4y^2+256x^4z^2+768x^2y^4+512x^2y^2z^2+256y^6+256y^4z^2-1536x^5\
    +512x^4z-3072x^3y^2-1024x^3z^2-128x^2y^2z+512x^2z^3-1536xy^4-1024xy^2z^2-640y^4z-512y^2z^3\
    +3712x^4-2048x^3z+4928x^2y^2-1152x^2yz+1664x^2z^2+256xy^2z-1024xz^3+784y^4-1152y^3z\
    +1024y^2z^2-1024yz^3+256z^4-4608x^3+576x^2y+2656x^2z-3712xy^2+2304xyz-1280xz^2-288y^3\
    -448y^2z+384yz^2+128z^3+3232x^2-1152xy-1216xz+584y^2-1056yz+496z^2-1344x+344y+120z+257";

pub fn poly(text: &str) -> MPoly<Rat> {
    parse_surface_expression(text).unwrap()
}

pub fn rf(text: &str) -> RatFunc {
    parse_rational_function(text).unwrap()
}

pub fn mat2(s1: &str, s2: &str, s3: &str, r: &str) -> SquaredMAT {
    SquaredMAT { s: [rf(s1), rf(s2), rf(s3)], r: rf(r) }
}

pub fn example1() -> MPoly<Rat> {
    poly(EXAMPLE1)
}

pub fn example2() -> MPoly<Rat> {
    poly(EXAMPLE2)
}

pub fn example1_mat() -> SquaredMAT {
    mat2("9/5776 t^2 - 1/2", "-3/38 t", "0", "(9/5776 t^2 + 5/2)^2")
}

pub fn example2_mat() -> SquaredMAT {
    mat2("1", "-7(2t-1)/(12t-5)", "49(4t^2-4t+1)/(12t-5)^2", "-7(2t-1)/(12t-5)")
}
