#pragma once

#include "sjet/prolongation.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace sjet {

/// Homogeneous derivation of a chart algebra, stored by its values on the
/// coordinates. A field of parity p sends a coordinate of parity q to an
/// element of parity p + q.
class VectorField {
public:
    /// Throws CoverageError on a wrong number of values, AlgebraError on
    /// foreign values and ParityError on values of the wrong parity.
    VectorField(Chart chart, Parity parity, std::vector<SuperPolynomial> values);

    static VectorField zero(const Chart& chart, Parity parity);

    const Chart& chart() const { return chart_; }
    Parity parity() const { return parity_; }
    const std::vector<SuperPolynomial>& values() const { return values_; }
    const SuperPolynomial& value(std::size_t coordinate) const { return values_[coordinate]; }
    const SuperPolynomial& value(std::string_view coordinate) const;

    bool is_zero() const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(const Rational& c);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator-(VectorField a) { return a *= Rational(-1); }
    friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }

    friend bool operator==(const VectorField& a, const VectorField& b)
    {
        return same_algebra(a.chart_.algebra(), b.chart_.algebra()) && a.parity_ == b.parity_ &&
               a.values_ == b.values_;
    }

private:
    Chart chart_;
    Parity parity_;
    std::vector<SuperPolynomial> values_;
};

/// X(f) = sum_A X(x^A) * df/dx^A with left derivatives.
SuperPolynomial apply(const VectorField& x, const SuperPolynomial& f);

/// Graded commutator [X,Y] = XY - (-1)^{|X||Y|} YX, of parity |X| + |Y|.
VectorField bracket(const VectorField& x, const VectorField& y);

/// The canonical fields on PiT(T(k) C).
struct CanonicalFields {
    ProlongedChart jets;      // T(k) C
    AntitangentChart forms;   // PiT(T(k) C)
    VectorField d;            // de Rham differential, odd
    VectorField delta1;       // counts differentials, even
    VectorField delta2;       // counts jet order, even
    VectorField delta;        // delta1 + delta2
    VectorField J;            // higher almost tangent structure, odd
};

/// Throws DomainError for negative k.
CanonicalFields canonical_fields(const Chart& chart, int k);

/// Weight field sum_r r x@r d/dx@r on T(k) C.
VectorField weight_field(const ProlongedChart& chart);

enum class CanonicalField { D, Delta1, Delta2, Delta, J };

std::string_view to_string(CanonicalField f);
const VectorField& field(const CanonicalFields& fields, CanonicalField f);

/// One displayed identity [left, right] = sign * rhs (sign 0 means "= 0").
struct Relation {
    int table;
    CanonicalField left;
    CanonicalField right;
    int sign;
    CanonicalField rhs;
};

/// The three bracket tables in display order.
const std::vector<Relation>& relation_tables();

struct RelationReport {
    struct Row {
        Relation relation;
        bool holds;
    };
    Chart base;
    unsigned order;
    std::vector<Row> rows;

    bool all_hold() const;
};

/// Computes every bracket of the tables exactly. Throws DomainError for k < 1.
RelationReport verify_relations(const Chart& chart, int k);

} // namespace sjet
