#include "l0simons/rv.hpp"

#include "l0simons/errors.hpp"

namespace l0simons {

namespace {

void require_same_space(const Rv& x, const Rv& y, const char* op) {
    if (!same_space(x.space(), y.space())) {
        throw StructuralError(std::string(op) + ": operands live on different probability spaces");
    }
}

}  // namespace

Rv::Rv(SpacePtr space, std::vector<Rat> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw StructuralError("random variable requires a probability space");
    if (values_.size() != space_->size()) {
        throw StructuralError("random variable has " + std::to_string(values_.size()) +
                              " values for " + std::to_string(space_->size()) + " atoms");
    }
}

Rv Rv::constant(SpacePtr space, const Rat& value) {
    if (!space) throw StructuralError("random variable requires a probability space");
    std::vector<Rat> values(space->size(), value);
    return Rv(std::move(space), std::move(values));
}

bool Rv::nonnegative() const {
    for (const Rat& v : values_) {
        if (sgn(v) < 0) return false;
    }
    return true;
}

bool Rv::strictly_positive() const {
    for (const Rat& v : values_) {
        if (sgn(v) <= 0) return false;
    }
    return true;
}

Rv Rv::abs() const {
    std::vector<Rat> values;
    values.reserve(values_.size());
    for (const Rat& v : values_) values.push_back(::abs(v));
    return Rv(space_, std::move(values));
}

Rv Rv::operator-() const {
    std::vector<Rat> values;
    values.reserve(values_.size());
    for (const Rat& v : values_) values.push_back(Rat(-v));
    return Rv(space_, std::move(values));
}

Rv operator+(const Rv& x, const Rv& y) {
    require_same_space(x, y, "add");
    std::vector<Rat> values;
    values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) values.push_back(Rat(x.at(i) + y.at(i)));
    return Rv(x.space(), std::move(values));
}

Rv operator-(const Rv& x, const Rv& y) {
    require_same_space(x, y, "subtract");
    std::vector<Rat> values;
    values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) values.push_back(Rat(x.at(i) - y.at(i)));
    return Rv(x.space(), std::move(values));
}

Rv operator*(const Rv& x, const Rv& y) {
    require_same_space(x, y, "multiply");
    std::vector<Rat> values;
    values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) values.push_back(Rat(x.at(i) * y.at(i)));
    return Rv(x.space(), std::move(values));
}

Rv operator*(const Rat& c, const Rv& x) {
    std::vector<Rat> values;
    values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) values.push_back(Rat(c * x.at(i)));
    return Rv(x.space(), std::move(values));
}

bool operator==(const Rv& x, const Rv& y) {
    if (!same_space(x.space(), y.space())) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.at(i) != y.at(i)) return false;
    }
    return true;
}

bool leq(const Rv& x, const Rv& y) {
    require_same_space(x, y, "leq");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.at(i) > y.at(i)) return false;
    }
    return true;
}

bool lt(const Rv& x, const Rv& y) {
    require_same_space(x, y, "lt");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.at(i) >= y.at(i)) return false;
    }
    return true;
}

bool leq_on(const Rv& x, const Rv& y, const Event& on) {
    require_same_space(x, y, "leq_on");
    if (!same_space(x.space(), on.space())) {
        throw StructuralError("leq_on: event lives on a different probability space");
    }
    if (on.empty()) throw DomainError("leq_on: the restricting event is empty");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (on.contains(i) && x.at(i) > y.at(i)) return false;
    }
    return true;
}

Rv pointwise_min(const Rv& x, const Rv& y) {
    require_same_space(x, y, "pointwise_min");
    std::vector<Rat> values;
    values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        values.push_back(x.at(i) <= y.at(i) ? x.at(i) : y.at(i));
    }
    return Rv(x.space(), std::move(values));
}

Rv pointwise_max(const Rv& x, const Rv& y) {
    require_same_space(x, y, "pointwise_max");
    std::vector<Rat> values;
    values.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        values.push_back(x.at(i) >= y.at(i) ? x.at(i) : y.at(i));
    }
    return Rv(x.space(), std::move(values));
}

}  // namespace l0simons
