//! Scalar field abstraction shared by every shape family.

/// A pure function of two coordinates. Negative inside, zero on the curve.
pub trait Field2 {
    fn eval(&self, x: f64, y: f64) -> f64;
}

impl<F: Fn(f64, f64) -> f64> Field2 for F {
    #[inline]
    fn eval(&self, x: f64, y: f64) -> f64 {
        self(x, y)
    }
}

/// A pure function of three coordinates. Negative inside, zero on the surface.
pub trait Field3 {
    fn eval(&self, x: f64, y: f64, z: f64) -> f64;
}

impl<F: Fn(f64, f64, f64) -> f64> Field3 for F {
    #[inline]
    fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        self(x, y, z)
    }
}

/// Pointwise maximum of two inside-negative fields.
#[derive(Debug, Clone, Copy)]
pub struct Intersection<A, B> {
    pub a: A,
    pub b: B,
}

impl<A: Field3, B: Field3> Field3 for Intersection<A, B> {
    #[inline]
    fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        max(self.a.eval(x, y, z), self.b.eval(x, y, z))
    }
}

/// Solid intersection of `a` and `b`.
pub fn csg_intersect<A: Field3, B: Field3>(a: A, b: B) -> Intersection<A, B> {
    Intersection { a, b }
}

// NaN-propagating maximum; `f64::max` would silently drop a NaN operand.
#[inline]
pub(crate) fn max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else if a >= b {
        a
    } else {
        b
    }
}
