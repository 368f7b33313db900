#include "pmv/metric.hpp"

#include <sstream>

namespace pmv {

namespace {

const GammaAlgebra& zn_interval(const Algebra& a) {
    const auto* gamma = dynamic_cast<const GammaAlgebra*>(&a);
    if (gamma == nullptr || gamma->group().kind() != GroupKind::zn_componentwise)
        throw std::invalid_argument("metric: context requires an interval of Z^n");
    return *gamma;
}

}  // namespace

MetricContext extend_state(const RState& s) {
    const GammaAlgebra& gamma = zn_interval(*s.algebra());
    if (s.target().kind() != RieszKind::qn)
        throw std::invalid_argument("extend_state: target must be Q^m");
    MetricContext ctx{s.algebra(), s, {}};
    const int d = gamma.group().dim();
    for (int i = 0; i < d; ++i) {
        Vec e(d, Rat(0));
        e[i] = 1;  // e_i <= u since every unit coordinate is >= 1
        ctx.basis_values.push_back(s(Elem::coords(std::move(e))));
    }
    return ctx;
}

Vec extended_value(const MetricContext& ctx, Vec g) {
    const GammaAlgebra& gamma = zn_interval(*ctx.interval);
    const UnitalGroup& grp = gamma.group();
    grp.require_element(g);
    const auto slice_sum = [&](Vec p) {
        Vec acc = ctx.state.target().zero();
        while (!vec_is_zero(p)) {
            const Vec x = grp.meet(p, grp.unit());
            acc = ctx.state.target().add(acc, ctx.state(Elem::coords(x)));
            p = grp.sub(p, x);
        }
        return acc;
    };
    const Vec zero = grp.zero();
    const Vec pos = grp.join(g, zero);
    const Vec neg = grp.join(grp.neg(g), zero);
    return ctx.state.target().sub(slice_sum(pos), slice_sum(neg));
}

Rat pseudo_norm(const MetricContext& ctx, const Vec& g) {
    return ctx.state.target().norm_unit(extended_value(ctx, g));
}

Rat dist(const MetricContext& ctx, const Vec& x, const Vec& y) {
    const GammaAlgebra& gamma = zn_interval(*ctx.interval);
    return pseudo_norm(ctx, gamma.group().sub(x, y));
}

linalg::IMat norm_kernel(const MetricContext& ctx) {
    const int d = static_cast<int>(ctx.basis_values.size());
    const int m = ctx.state.target().dim();
    Int scale = 1;
    for (const Vec& v : ctx.basis_values)
        for (const Rat& c : v) scale = lcm(scale, denominator(c));
    linalg::IMat a(m, std::vector<Int>(d));
    for (int r = 0; r < m; ++r)
        for (int i = 0; i < d; ++i) {
            const Rat& c = ctx.basis_values[i][r];
            a[r][i] = numerator(c) * (scale / denominator(c));
        }
    return linalg::integer_kernel_basis(a);
}

bool image_member(const MetricContext& ctx, const Vec& value) {
    return linalg::lattice_member(ctx.basis_values, value);
}

const NormPropertyReport::Property* NormPropertyReport::find(const std::string& name) const {
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

NormPropertyReport check_norm_properties(const MetricContext& ctx,
                                         const std::vector<Vec>& samples) {
    const GammaAlgebra& gamma = zn_interval(*ctx.interval);
    const UnitalGroup& grp = gamma.group();
    const RieszRep& target = ctx.state.target();
    NormPropertyReport report;

    const auto run = [&](const std::string& name, auto&& body) {
        NormPropertyReport::Property prop;
        prop.name = name;
        body(prop);
        if (!prop.passed) report.all_passed = false;
        report.properties.push_back(std::move(prop));
    };
    const auto fail = [&](NormPropertyReport::Property& prop, const Vec& x, const Vec& y) {
        prop.passed = false;
        std::ostringstream os;
        os << "x=" << vec_str(x) << " y=" << vec_str(y);
        prop.counterexample = os.str();
    };

    run("triangle", [&](auto& prop) {
        for (const Vec& x : samples)
            for (const Vec& y : samples) {
                ++prop.checked;
                if (pseudo_norm(ctx, grp.add(x, y)) > pseudo_norm(ctx, x) + pseudo_norm(ctx, y)) {
                    fail(prop, x, y);
                    return;
                }
            }
    });
    run("coordinate-lipschitz", [&](auto& prop) {
        for (const Vec& x : samples)
            for (const Vec& y : samples) {
                ++prop.checked;
                const Vec vx = extended_value(ctx, x), vy = extended_value(ctx, y);
                const Rat bound = pseudo_norm(ctx, grp.sub(x, y));
                for (int t = 0; t < target.dim(); ++t)
                    if (rabs(vx[t] - vy[t]) > bound) {
                        fail(prop, x, y);
                        return;
                    }
            }
    });
    run("integer-scaling", [&](auto& prop) {
        for (const Vec& x : samples)
            for (int nmul = -3; nmul <= 3; ++nmul) {
                ++prop.checked;
                Vec nx(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) nx[i] = Rat(nmul) * x[i];
                if (pseudo_norm(ctx, nx) > Rat(std::abs(nmul)) * pseudo_norm(ctx, x)) {
                    fail(prop, x, x);
                    return;
                }
            }
    });
    run("symmetry-and-zero", [&](auto& prop) {
        ++prop.checked;
        if (pseudo_norm(ctx, grp.zero()) != 0) {
            fail(prop, grp.zero(), grp.zero());
            return;
        }
        for (const Vec& x : samples) {
            ++prop.checked;
            if (pseudo_norm(ctx, grp.neg(x)) != pseudo_norm(ctx, x)) {
                fail(prop, x, x);
                return;
            }
        }
    });
    run("order-monotonicity", [&](auto& prop) {
        for (const Vec& y : samples) {
            if (!grp.leq(grp.zero(), y)) continue;
            for (const Vec& x : samples) {
                if (!grp.leq(grp.neg(y), x) || !grp.leq(x, y)) continue;
                ++prop.checked;
                if (pseudo_norm(ctx, x) > pseudo_norm(ctx, y)) {
                    fail(prop, x, y);
                    return;
                }
            }
        }
    });
    return report;
}

InterpolationReport check_interpolation(const MetricContext& ctx,
                                        const std::vector<InterpolationCase>& quads) {
    const RieszRep& target = ctx.state.target();
    InterpolationReport report;
    for (std::size_t i = 0; i < quads.size(); ++i) {
        const InterpolationCase& q = quads[i];
        if (!target.leq(q.x1, q.y1) || !target.leq(q.x1, q.y2) || !target.leq(q.x2, q.y1) ||
            !target.leq(q.x2, q.y2))
            throw std::invalid_argument("check_interpolation: quadruple violates x_i <= y_j");
        ++report.checked;
        const Vec z = target.join(q.x1, q.x2);
        const bool ok = image_member(ctx, z) && target.leq(z, q.y1) && target.leq(z, q.y2);
        if (ok) {
            ++report.passed;
        } else {
            report.failures.push_back(i);
            report.all_passed = false;
        }
    }
    return report;
}

}  // namespace pmv
