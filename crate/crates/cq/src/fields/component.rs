//! Real-valued component fields over spacetime.
//!
//! A [`Component`] is one scalar function of an [`Event`] together with
//! whatever analytic derivatives it can supply. Two representations exist:
//! polynomials (exact derivatives of every order, precomputed symbolically)
//! and closures with optional gradient and Hessian callbacks. Finite
//! difference backends only ever need `value`, so a bare closure still works
//! everywhere — analytic mode reports [`Error::BackendUnavailable`] when a
//! derivative of the required order is missing.

use super::poly::Poly4;
use crate::error::{Error, Result};
use crate::minkowski::Event;
use std::sync::Arc;

/// One of the four coordinate directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    T,
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::T, Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::T => 0,
            Axis::X => 1,
            Axis::Y => 2,
            Axis::Z => 3,
        }
    }

    /// The spatial axis with index `s` (0 = x, 1 = y, 2 = z).
    pub fn spatial(s: usize) -> Axis {
        [Axis::X, Axis::Y, Axis::Z][s]
    }
}

type ValueFn = Arc<dyn Fn(Event) -> f64 + Send + Sync>;
type GradFn = Arc<dyn Fn(Event) -> [f64; 4] + Send + Sync>;
type HessFn = Arc<dyn Fn(Event) -> [[f64; 4]; 4] + Send + Sync>;

#[derive(Clone)]
struct PolyParts {
    value: Poly4,
    gradient: [Poly4; 4],
    hessian: [[Poly4; 4]; 4],
}

#[derive(Clone)]
struct AnalyticParts {
    value: ValueFn,
    gradient: Option<GradFn>,
    hessian: Option<HessFn>,
}

#[derive(Clone)]
enum Repr {
    Poly(Box<PolyParts>),
    Analytic(AnalyticParts),
}

/// A real-valued field component with optional analytic derivatives.
#[derive(Clone)]
pub struct Component {
    repr: Repr,
}

impl std::fmt::Debug for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::Poly(p) => write!(f, "Component::Poly({:?})", p.value),
            Repr::Analytic(a) => write!(
                f,
                "Component::Analytic(gradient: {}, hessian: {})",
                a.gradient.is_some(),
                a.hessian.is_some()
            ),
        }
    }
}

impl Component {
    /// Polynomial component; first and second derivatives are expanded
    /// symbolically up front.
    pub fn poly(value: Poly4) -> Component {
        let gradient = std::array::from_fn(|axis| value.partial(axis));
        let hessian: [[Poly4; 4]; 4] =
            std::array::from_fn(|a| std::array::from_fn(|b| gradient[a].partial(b)));
        Component {
            repr: Repr::Poly(Box::new(PolyParts {
                value,
                gradient,
                hessian,
            })),
        }
    }

    pub fn zero() -> Component {
        Component::poly(Poly4::zero())
    }

    pub fn constant(c: f64) -> Component {
        Component::poly(Poly4::constant(c))
    }

    /// Closure component carrying values only.
    pub fn from_fn(value: impl Fn(Event) -> f64 + Send + Sync + 'static) -> Component {
        Component {
            repr: Repr::Analytic(AnalyticParts {
                value: Arc::new(value),
                gradient: None,
                hessian: None,
            }),
        }
    }

    /// Attaches an analytic gradient callback returning `[d/dt, d/dx, d/dy, d/dz]`.
    ///
    /// Only valid on closure components.
    pub fn with_gradient(self, grad: impl Fn(Event) -> [f64; 4] + Send + Sync + 'static) -> Component {
        match self.repr {
            Repr::Analytic(mut parts) => {
                parts.gradient = Some(Arc::new(grad));
                Component {
                    repr: Repr::Analytic(parts),
                }
            }
            Repr::Poly(_) => panic!("polynomial components already carry exact derivatives"),
        }
    }

    /// Attaches an analytic Hessian callback (second partials, `[a][b]` order).
    pub fn with_hessian(
        self,
        hess: impl Fn(Event) -> [[f64; 4]; 4] + Send + Sync + 'static,
    ) -> Component {
        match self.repr {
            Repr::Analytic(mut parts) => {
                parts.hessian = Some(Arc::new(hess));
                Component {
                    repr: Repr::Analytic(parts),
                }
            }
            Repr::Poly(_) => panic!("polynomial components already carry exact derivatives"),
        }
    }

    /// The harmonic `amplitude * sin(k . (t,x,y,z) + phase)` with plain
    /// (non-metric) contraction; smooth with analytic derivatives of every
    /// order used here.
    pub fn wave(amplitude: f64, k: [f64; 4], phase: f64) -> Component {
        let arg = move |e: Event| {
            let c = e.coords();
            k[0] * c[0] + k[1] * c[1] + k[2] * c[2] + k[3] * c[3] + phase
        };
        Component::from_fn(move |e| amplitude * arg(e).sin())
            .with_gradient(move |e| {
                let c = arg(e).cos();
                std::array::from_fn(|axis| amplitude * k[axis] * c)
            })
            .with_hessian(move |e| {
                let s = arg(e).sin();
                std::array::from_fn(|a| std::array::from_fn(|b| -amplitude * k[a] * k[b] * s))
            })
    }

    pub fn value(&self, e: Event) -> f64 {
        match &self.repr {
            Repr::Poly(p) => p.value.eval(e),
            Repr::Analytic(a) => (a.value)(e),
        }
    }

    pub fn has_gradient(&self) -> bool {
        match &self.repr {
            Repr::Poly(_) => true,
            Repr::Analytic(a) => a.gradient.is_some(),
        }
    }

    pub fn has_hessian(&self) -> bool {
        match &self.repr {
            Repr::Poly(_) => true,
            Repr::Analytic(a) => a.hessian.is_some(),
        }
    }

    /// Analytic first partial along `axis`.
    pub fn analytic_partial(&self, axis: Axis, e: Event) -> Result<f64> {
        match &self.repr {
            Repr::Poly(p) => Ok(p.gradient[axis.index()].eval(e)),
            Repr::Analytic(a) => match &a.gradient {
                Some(g) => Ok(g(e)[axis.index()]),
                None => Err(Error::BackendUnavailable {
                    missing: "first-order analytic",
                }),
            },
        }
    }

    /// Analytic second partial `d^2 / (d axis_a d axis_b)`.
    pub fn analytic_partial2(&self, a: Axis, b: Axis, e: Event) -> Result<f64> {
        match &self.repr {
            Repr::Poly(p) => Ok(p.hessian[a.index()][b.index()].eval(e)),
            Repr::Analytic(parts) => match &parts.hessian {
                Some(h) => Ok(h(e)[a.index()][b.index()]),
                None => Err(Error::BackendUnavailable {
                    missing: "second-order analytic",
                }),
            },
        }
    }

    /// The component `d(self)/d(axis)` as a new field.
    ///
    /// Polynomials stay polynomials; closures shift their derivative stack
    /// down one order (the result has a gradient only when `self` had a
    /// Hessian). Requires an analytic gradient on `self`.
    pub fn derivative(&self, axis: Axis) -> Result<Component> {
        match &self.repr {
            Repr::Poly(p) => Ok(Component::poly(p.gradient[axis.index()].clone())),
            Repr::Analytic(parts) => {
                let grad = parts.gradient.clone().ok_or(Error::BackendUnavailable {
                    missing: "first-order analytic",
                })?;
                let idx = axis.index();
                let value_grad = Arc::clone(&grad);
                let mut out = Component::from_fn(move |e| value_grad(e)[idx]);
                if let Some(hess) = parts.hessian.clone() {
                    out = out.with_gradient(move |e| hess(e)[idx]);
                }
                Ok(out)
            }
        }
    }

    /// Pointwise `self + factor * other`. Symbolic when both sides are
    /// polynomials; otherwise closures, keeping whatever derivative orders
    /// both sides can supply.
    pub fn add_scaled(&self, other: &Component, factor: f64) -> Component {
        if let (Repr::Poly(a), Repr::Poly(b)) = (&self.repr, &other.repr) {
            return Component::poly(a.value.add_scaled(&b.value, factor));
        }
        let (lhs, rhs) = (self.clone(), other.clone());
        let mut out = {
            let (lhs, rhs) = (lhs.clone(), rhs.clone());
            Component::from_fn(move |e| lhs.value(e) + factor * rhs.value(e))
        };
        if self.has_gradient() && other.has_gradient() {
            let (lhs, rhs) = (lhs.clone(), rhs.clone());
            out = out.with_gradient(move |e| {
                std::array::from_fn(|axis| {
                    let a = Axis::ALL[axis];
                    lhs.analytic_partial(a, e).expect("gradient checked")
                        + factor * rhs.analytic_partial(a, e).expect("gradient checked")
                })
            });
        }
        if self.has_hessian() && other.has_hessian() {
            out = out.with_hessian(move |e| {
                std::array::from_fn(|a| {
                    std::array::from_fn(|b| {
                        let (a, b) = (Axis::ALL[a], Axis::ALL[b]);
                        lhs.analytic_partial2(a, b, e).expect("hessian checked")
                            + factor * rhs.analytic_partial2(a, b, e).expect("hessian checked")
                    })
                })
            });
        }
        out
    }

    pub fn scaled(&self, factor: f64) -> Component {
        Component::zero().add_scaled(self, factor)
    }
}
