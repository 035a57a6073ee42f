//! Float math routed through std when available, libm otherwise.

#[cfg(feature = "std")]
mod imp {
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }

    pub fn floor(x: f64) -> f64 {
        x.floor()
    }

    /// Rounds half away from zero.
    pub fn round(x: f64) -> f64 {
        x.round()
    }

    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }

    pub fn log2(x: f64) -> f64 {
        x.log2()
    }
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
mod imp {
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }

    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }

    /// Rounds half away from zero, matching `f64::round`.
    pub fn round(x: f64) -> f64 {
        libm::round(x)
    }

    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }

    pub fn log2(x: f64) -> f64 {
        libm::log2(x)
    }
}

pub(crate) use imp::{abs, floor, log2, round, sqrt};
