#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "nilring/caps.hpp"
#include "nilring/errors.hpp"

namespace nilring {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Read-only view of raw operation tables. Kernels validate tables through
/// this view before a FiniteRing exists.
struct TableView {
    int order = 0;
    const std::uint16_t* add = nullptr;
    const std::uint16_t* mul = nullptr;
    int zero = 0;
    int one = 0;
};

/// A finite unital ring on the dense element set 0..order-1. All structure
/// lives in the addition and multiplication tables; elements carry no meaning
/// beyond their index. Instances are immutable after construction and safe to
/// share across threads.
class FiniteRing {
public:
    int order() const { return order_; }

    int add(int a, int b) const { return add_[std::size_t(a) * order_ + b]; }
    int mul(int a, int b) const { return mul_[std::size_t(a) * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int zero() const { return zero_; }
    int one() const { return one_; }
    bool commutative() const { return commutative_; }

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& element_names() const { return names_; }

    /// Provenance label in the inline-spec form ("cyclic:12", "ut3:2", ...).
    const std::string& construction_tag() const { return tag_; }

    TableView tables() const { return {order_, add_.data(), mul_.data(), zero_, one_}; }

    /// Smallest k >= 1 with k*a = 0.
    int additive_order(int a) const { return add_order_[a]; }

    /// a^k for k >= 1.
    int mul_power(int a, int k) const;

    bool nilpotent_element(int a) const { return nilpotent_[a] != 0; }
    bool unit(int a) const { return unit_[a] != 0; }
    bool idempotent(int a) const { return mul(a, a) == a; }

    /// Multiplicative inverse; element must be a unit.
    int inverse(int a) const;

    /// Validates tables, then builds the ring with all derived caches.
    /// Throws AxiomViolation / InvalidParameter / CapExceeded.
    static RingPtr create(std::vector<std::uint16_t> add_table,
                          std::vector<std::uint16_t> mul_table, int zero, int one,
                          std::vector<std::string> names, std::string tag,
                          const Caps& caps = {});

private:
    FiniteRing() = default;

    int order_ = 0;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    int zero_ = 0;
    int one_ = 0;
    bool commutative_ = false;
    std::string tag_;
    std::vector<std::string> names_;
    std::vector<int> neg_;
    std::vector<int> add_order_;
    std::vector<std::uint8_t> nilpotent_;
    std::vector<std::uint8_t> unit_;
    std::vector<int> inv_;  // inverse for units, -1 otherwise
};

/// A ring homomorphism given by its image table. Validated at construction:
/// additive and multiplicative on all pairs.
struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<int> map;
    bool unital = false;

    int operator()(int x) const { return map[x]; }

    /// Verifies the hom laws exhaustively; throws InvalidParameter if the
    /// table is not a homomorphism.
    static RingHom checked(RingPtr source, RingPtr target, std::vector<int> map);

    static RingHom identity(const RingPtr& ring);
};

bool operator==(const RingHom& a, const RingHom& b);

// --- constructors for the ring families the corpus uses ---

RingPtr build_ring_from_tables(std::vector<std::uint16_t> add_table,
                               std::vector<std::uint16_t> mul_table, int zero, int one,
                               std::vector<std::string> names, const Caps& caps = {});

/// Integers mod n. n = 1 gives the zero ring.
RingPtr make_cyclic_ring(int n, const Caps& caps = {});

/// 3x3 upper-triangular matrices a*I + b*E12 + c*E13 + d*E23 with entries in
/// Z/m. Order m^4; noncommutative for every m >= 2.
RingPtr make_ut3_ring(int m, const Caps& caps = {});

RingPtr make_product_ring(const std::vector<RingPtr>& factors, const Caps& caps = {});

// --- ut3 coordinate helpers (element index <-> (a,b,c,d)) ---

struct Ut3Coords {
    int a, b, c, d;
};
int ut3_modulus(const FiniteRing& ring);  // throws InvalidParameter unless tagged ut3
int ut3_index(int m, Ut3Coords c);
Ut3Coords ut3_coords(int m, int index);

// --- ring spec: corpus addressing for the constructors above ---

struct RingSpec {
    enum class Kind { cyclic, ut3, product, quotient, tables };

    Kind kind = Kind::cyclic;
    int n = 0;                        // cyclic modulus / ut3 coefficient modulus
    std::vector<RingSpec> factors;    // product
    std::shared_ptr<RingSpec> base;   // quotient
    std::vector<int> quotient_gens;   // quotient (generators of a two-sided ideal)
    std::string path;                 // tables

    /// Throws InvalidParameter on out-of-range parameters.
    void validate() const;

    /// Canonical inline form: cyclic:12, ut3:2, product:cyclic:2+cyclic:4,
    /// tables:PATH.
    std::string to_string() const;

    /// Parses the inline form. Throws InvalidParameter.
    static RingSpec parse(const std::string& text);

    RingPtr build(const Caps& caps = {}) const;

    static RingSpec cyclic(int n);
    static RingSpec ut3(int m);
    static RingSpec product(std::vector<RingSpec> factors);
};

bool operator==(const RingSpec& a, const RingSpec& b);

// --- table file format: order, order^2 add entries, order^2 mul entries,
// --- then zero and one, all whitespace separated ---

RingPtr read_table_stream(std::istream& in, const Caps& caps = {});
RingPtr read_table_file(const std::string& path, const Caps& caps = {});
void write_table_stream(const FiniteRing& ring, std::ostream& out);

}  // namespace nilring
