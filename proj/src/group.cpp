#include "lcapego/group.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lcapego/config.hpp"

namespace lcapego {

namespace {

long mod_reduce(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

GroupModel GroupModel::finite_product(std::vector<long> moduli) {
    if (moduli.empty()) throw InvalidSpec("finite product needs at least one modulus");
    GroupModel g;
    g.kind_ = GroupKind::FiniteProduct;
    g.point_count_ = 1;
    const std::size_t cap = max_points();
    for (long n : moduli) {
        if (n < 1) throw InvalidSpec("finite product moduli must be positive");
        if (g.point_count_ > cap / static_cast<std::size_t>(n))
            throw InvalidSpec("point count exceeds the configured cap");
        g.point_count_ *= static_cast<std::size_t>(n);
        g.axis_size_.push_back(n);
        g.axis_min_.push_back(0);
    }
    g.moduli_ = std::move(moduli);
    g.haar_weight_ = 1.0;
    g.cell_step_ = 1.0;
    return g;
}

GroupModel GroupModel::z_window(long half_width) {
    if (half_width < 0) throw InvalidSpec("z_window half_width must be nonnegative");
    const std::size_t count = 2 * static_cast<std::size_t>(half_width) + 1;
    if (count > max_points()) throw InvalidSpec("point count exceeds the configured cap");
    GroupModel g;
    g.kind_ = GroupKind::ZWindow;
    g.half_width_ = half_width;
    g.axis_size_ = {2 * half_width + 1};
    g.axis_min_ = {-half_width};
    g.point_count_ = count;
    g.haar_weight_ = 1.0;
    g.cell_step_ = 1.0;
    return g;
}

GroupModel GroupModel::real_grid(int dims, double half_extent, long points_per_axis) {
    if (dims < 1) throw InvalidSpec("real_grid dims must be positive");
    if (!(half_extent > 0.0)) throw InvalidSpec("real_grid half_extent must be positive");
    if (points_per_axis < 1 || points_per_axis % 2 == 0)
        throw InvalidSpec("real_grid points_per_axis must be odd and positive");
    GroupModel g;
    g.kind_ = GroupKind::RealGrid;
    g.half_extent_ = half_extent;
    g.points_per_axis_ = points_per_axis;
    g.cell_step_ = 2.0 * half_extent / static_cast<double>(points_per_axis);
    g.point_count_ = 1;
    const std::size_t cap = max_points();
    for (int a = 0; a < dims; ++a) {
        if (g.point_count_ > cap / static_cast<std::size_t>(points_per_axis))
            throw InvalidSpec("point count exceeds the configured cap");
        g.point_count_ *= static_cast<std::size_t>(points_per_axis);
        g.axis_size_.push_back(points_per_axis);
        g.axis_min_.push_back(-(points_per_axis - 1) / 2);
    }
    g.haar_weight_ = std::pow(g.cell_step_, dims);
    return g;
}

std::optional<GroupElement> GroupModel::reduce(std::span<const long> coords) const {
    if (coords.size() != axis_size_.size()) return std::nullopt;
    GroupElement e;
    e.coords.resize(coords.size());
    for (std::size_t a = 0; a < coords.size(); ++a) {
        if (kind_ == GroupKind::FiniteProduct) {
            e.coords[a] = mod_reduce(coords[a], moduli_[a]);
        } else {
            const long lo = axis_min_[a];
            const long hi = lo + axis_size_[a] - 1;
            if (coords[a] < lo || coords[a] > hi) return std::nullopt;
            e.coords[a] = coords[a];
        }
    }
    return e;
}

GroupElement GroupModel::element(std::vector<long> coords) const {
    auto r = reduce(coords);
    if (!r) throw InvalidSpec("coordinates do not name a point of " + describe());
    return *r;
}

GroupElement GroupModel::neutral() const {
    GroupElement e;
    e.coords.assign(axis_size_.size(), 0);
    return e;
}

std::size_t GroupModel::flat_index(const GroupElement& x) const {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < axis_size_.size(); ++a)
        idx = idx * static_cast<std::size_t>(axis_size_[a]) +
              static_cast<std::size_t>(x.coords[a] - axis_min_[a]);
    return idx;
}

GroupElement GroupModel::point(std::size_t flat) const {
    GroupElement e;
    e.coords.resize(axis_size_.size());
    for (std::size_t a = axis_size_.size(); a-- > 0;) {
        const auto n = static_cast<std::size_t>(axis_size_[a]);
        e.coords[a] = static_cast<long>(flat % n) + axis_min_[a];
        flat /= n;
    }
    return e;
}

std::optional<GroupElement> GroupModel::add(const GroupElement& x, const GroupElement& y) const {
    std::vector<long> c(x.coords.size());
    for (std::size_t a = 0; a < c.size(); ++a) c[a] = x.coords[a] + y.coords[a];
    return reduce(c);
}

std::optional<GroupElement> GroupModel::sub(const GroupElement& x, const GroupElement& y) const {
    std::vector<long> c(x.coords.size());
    for (std::size_t a = 0; a < c.size(); ++a) c[a] = x.coords[a] - y.coords[a];
    return reduce(c);
}

GroupElement GroupModel::neg(const GroupElement& x) const {
    GroupElement e;
    e.coords.resize(x.coords.size());
    for (std::size_t a = 0; a < x.coords.size(); ++a) {
        if (kind_ == GroupKind::FiniteProduct)
            e.coords[a] = mod_reduce(-x.coords[a], moduli_[a]);
        else
            e.coords[a] = -x.coords[a];
    }
    return e;
}

bool GroupModel::operator==(const GroupModel& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case GroupKind::FiniteProduct: return moduli_ == other.moduli_;
        case GroupKind::ZWindow: return half_width_ == other.half_width_;
        case GroupKind::RealGrid:
            return dims() == other.dims() && half_extent_ == other.half_extent_ &&
                   points_per_axis_ == other.points_per_axis_;
    }
    return false;
}

std::string GroupModel::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case GroupKind::FiniteProduct: {
            os << "finite[";
            for (std::size_t i = 0; i < moduli_.size(); ++i)
                os << (i ? "," : "") << moduli_[i];
            os << "]";
            break;
        }
        case GroupKind::ZWindow:
            os << "z_window(N=" << half_width_ << ")";
            break;
        case GroupKind::RealGrid:
            os << "real_grid(d=" << dims() << ",L=" << half_extent_
               << ",P=" << points_per_axis_ << ")";
            break;
    }
    return os.str();
}

GroupModel make_group(const GroupModel& spec) {
    // Factory methods already validate; re-route so callers holding a parsed
    // spec get a freshly validated model (and the cap re-checked against the
    // current environment).
    switch (spec.kind()) {
        case GroupKind::FiniteProduct: return GroupModel::finite_product(spec.moduli());
        case GroupKind::ZWindow: return GroupModel::z_window(spec.half_width());
        case GroupKind::RealGrid:
            return GroupModel::real_grid(spec.dims(), spec.half_extent(),
                                         spec.points_per_axis());
    }
    throw InvalidSpec("unknown group kind");
}

DualModel dual_of(const GroupModel& g, std::optional<long> grid_size) {
    DualModel d;
    d.source_ = g;
    switch (g.kind()) {
        case GroupKind::FiniteProduct:
            d.kind_ = DualKind::FiniteDual;
            d.point_count_ = g.point_count();
            d.dual_weight_ = 1.0 / static_cast<double>(g.point_count());
            break;
        case GroupKind::ZWindow:
            if (!grid_size)
                throw InvalidSpec("dual of a z_window needs a grid_size");
            if (*grid_size < 2) throw InvalidSpec("dual grid_size must be at least 2");
            d.kind_ = DualKind::CircleGrid;
            d.grid_size_ = *grid_size;
            d.point_count_ = static_cast<std::size_t>(*grid_size);
            d.dual_weight_ = 1.0 / static_cast<double>(*grid_size);
            break;
        case GroupKind::RealGrid:
            // The dual grid mirrors the source grid: one frequency sample per
            // reciprocal cell, weight (1/(2L))^d.
            d.kind_ = DualKind::RealGridDual;
            d.point_count_ = g.point_count();
            d.dual_weight_ = std::pow(1.0 / (2.0 * g.half_extent()), g.dims());
            break;
    }
    return d;
}

double DualModel::alpha(std::size_t j) const {
    if (kind_ != DualKind::CircleGrid) throw WrongModel("alpha is a CircleGrid accessor");
    return static_cast<double>(j) / static_cast<double>(grid_size_);
}

std::vector<long> DualModel::dual_point(std::size_t flat) const {
    if (kind_ == DualKind::CircleGrid) return {static_cast<long>(flat)};
    return source_.point(flat).coords;
}

std::complex<double> DualModel::character(std::size_t dual_flat, const GroupElement& x) const {
    // Phase accumulated per axis from exact integer products, reduced before
    // the float division so the angle stays well inside double precision.
    constexpr double two_pi = 2.0 * std::numbers::pi;
    switch (kind_) {
        case DualKind::FiniteDual: {
            const auto k = source_.point(dual_flat);
            double angle = 0.0;
            for (int a = 0; a < source_.dims(); ++a) {
                const long n = source_.moduli()[static_cast<std::size_t>(a)];
                const long p = ((k.coords[static_cast<std::size_t>(a)] %
                                 n) * (x.coords[static_cast<std::size_t>(a)] % n)) % n;
                angle += static_cast<double>(p) / static_cast<double>(n);
            }
            return std::polar(1.0, two_pi * angle);
        }
        case DualKind::CircleGrid: {
            const long M = grid_size_;
            const long p = mod_reduce(static_cast<long>(dual_flat) * x.coords[0], M);
            return std::polar(1.0, two_pi * static_cast<double>(p) / static_cast<double>(M));
        }
        case DualKind::RealGridDual: {
            // chi_xi(x) = exp(2 pi i sum_a j_a i_a / P) with xi_a = j_a/(2L)
            // and x_a = i_a * 2L/P.
            const long P = source_.points_per_axis();
            const auto j = source_.point(dual_flat);
            long p = 0;
            for (std::size_t a = 0; a < j.coords.size(); ++a)
                p = mod_reduce(p + j.coords[a] * x.coords[a], P);
            return std::polar(1.0, two_pi * static_cast<double>(p) / static_cast<double>(P));
        }
    }
    throw WrongModel("unknown dual kind");
}

bool DualModel::operator==(const DualModel& other) const {
    return kind_ == other.kind_ && grid_size_ == other.grid_size_ && source_ == other.source_;
}

std::string DualModel::describe() const {
    switch (kind_) {
        case DualKind::FiniteDual: return "finite_dual(" + source_.describe() + ")";
        case DualKind::CircleGrid: return "circle_grid(M=" + std::to_string(grid_size_) + ")";
        case DualKind::RealGridDual: return "real_grid_dual(" + source_.describe() + ")";
    }
    return "?";
}

std::complex<double> dual_integrate(const DualModel& d,
                                    std::span<const std::complex<double>> values) {
    if (values.size() != d.point_count())
        throw InvalidSpec("dual_integrate: values must cover every dual point");
    std::complex<double> acc = 0.0;
    for (const auto& v : values) acc += v;
    return acc * d.dual_haar_weight();
}

} // namespace lcapego
