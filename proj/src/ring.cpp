#include "nilring/ring.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nilring/kernels.hpp"

namespace nilring {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

int FiniteRing::mul_power(int a, int k) const {
    if (k < 1) throw InvalidParameter("mul_power requires k >= 1, got " + std::to_string(k));
    int x = a;
    for (int i = 1; i < k; ++i) x = mul(x, a);
    return x;
}

int FiniteRing::inverse(int a) const {
    if (!unit(a)) throw InvalidParameter("inverse of non-unit " + name(a));
    return inv_[a];
}

RingPtr FiniteRing::create(std::vector<std::uint16_t> add_table,
                           std::vector<std::uint16_t> mul_table, int zero, int one,
                           std::vector<std::string> names, std::string tag,
                           const Caps& caps) {
    const std::size_t sz = add_table.size();
    int n = int(std::llround(std::sqrt(double(sz))));
    while (n > 0 && std::size_t(n) * n > sz) --n;
    while (std::size_t(n + 1) * (n + 1) <= sz) ++n;
    if (n < 1 || std::size_t(n) * n != sz)
        throw InvalidParameter("addition table size " + std::to_string(sz) +
                               " is not a positive square");
    if (mul_table.size() != sz)
        throw InvalidParameter("multiplication table size does not match addition table");
    if (n > caps.max_order)
        throw CapExceeded("ring order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.max_order));
    if (n > 65535) throw InvalidParameter("ring order exceeds table index range");
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw InvalidParameter("distinguished element out of range");
    if (!names.empty() && int(names.size()) != n)
        throw InvalidParameter("element name list has wrong length");

    auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
    ring->order_ = n;
    ring->add_ = std::move(add_table);
    ring->mul_ = std::move(mul_table);
    ring->zero_ = zero;
    ring->one_ = one;
    ring->tag_ = std::move(tag);
    if (names.empty()) {
        names.reserve(n);
        for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    }
    ring->names_ = std::move(names);

    const TableView view = ring->tables();
    if (auto issue = kernels::find_axiom_violation(view, kernels::Mode::parallel))
        throw AxiomViolation(issue->axiom, issue->witness);

    ring->commutative_ = kernels::tables_commutative(view, kernels::Mode::parallel);
    ring->nilpotent_ = kernels::element_nilpotency_mask(view, kernels::Mode::parallel);

    ring->neg_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (ring->add(a, b) == zero) {
                ring->neg_[a] = b;
                break;
            }

    ring->add_order_.assign(n, 1);
    for (int a = 0; a < n; ++a) {
        int k = 1;
        int x = a;
        while (x != zero) {
            x = ring->add(x, a);
            ++k;
        }
        ring->add_order_[a] = k;
    }

    ring->unit_.assign(n, 0);
    ring->inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (ring->mul(a, b) == one && ring->mul(b, a) == one) {
                ring->unit_[a] = 1;
                ring->inv_[a] = b;
                break;
            }

    return ring;
}

RingHom RingHom::checked(RingPtr source, RingPtr target, std::vector<int> map) {
    if (!source || !target) throw InvalidParameter("hom endpoints must be non-null");
    const int n = source->order();
    if (int(map.size()) != n) throw InvalidParameter("hom map has wrong length");
    for (int x : map)
        if (x < 0 || x >= target->order())
            throw InvalidParameter("hom map entry out of range");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (map[source->add(a, b)] != target->add(map[a], map[b]))
                throw InvalidParameter("map is not additive at (" + source->name(a) + ", " +
                                       source->name(b) + ")");
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                throw InvalidParameter("map is not multiplicative at (" + source->name(a) +
                                       ", " + source->name(b) + ")");
        }
    RingHom h;
    h.source = std::move(source);
    h.target = std::move(target);
    h.unital = map[h.source->one()] == h.target->one();
    h.map = std::move(map);
    return h;
}

RingHom RingHom::identity(const RingPtr& ring) {
    std::vector<int> map(ring->order());
    for (int i = 0; i < ring->order(); ++i) map[i] = i;
    return checked(ring, ring, std::move(map));
}

bool operator==(const RingHom& a, const RingHom& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
}

RingPtr build_ring_from_tables(std::vector<std::uint16_t> add_table,
                               std::vector<std::uint16_t> mul_table, int zero, int one,
                               std::vector<std::string> names, const Caps& caps) {
    return FiniteRing::create(std::move(add_table), std::move(mul_table), zero, one,
                              std::move(names), "tables", caps);
}

RingPtr make_cyclic_ring(int n, const Caps& caps) {
    if (n < 1) throw InvalidParameter("cyclic modulus must be >= 1, got " + std::to_string(n));
    if (n > caps.max_order)
        throw CapExceeded("cyclic modulus " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.max_order));
    std::vector<std::uint16_t> add(std::size_t(n) * n);
    std::vector<std::uint16_t> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
            mul[std::size_t(a) * n + b] = std::uint16_t((a * b) % n);
        }
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return FiniteRing::create(std::move(add), std::move(mul), 0, n == 1 ? 0 : 1,
                              std::move(names), "cyclic:" + std::to_string(n), caps);
}

int ut3_index(int m, Ut3Coords c) { return ((c.a * m + c.b) * m + c.c) * m + c.d; }

Ut3Coords ut3_coords(int m, int index) {
    Ut3Coords c{};
    c.d = index % m;
    index /= m;
    c.c = index % m;
    index /= m;
    c.b = index % m;
    index /= m;
    c.a = index;
    return c;
}

int ut3_modulus(const FiniteRing& ring) {
    const std::string& tag = ring.construction_tag();
    if (tag.rfind("ut3:", 0) != 0)
        throw InvalidParameter("ring was not built by the ut3 constructor: " + tag);
    return std::stoi(tag.substr(4));
}

namespace {

std::string ut3_name(Ut3Coords c) {
    std::string s;
    auto term = [&s](int coef, const char* sym) {
        if (coef == 0) return;
        if (!s.empty()) s += "+";
        if (sym[0] == '\0') {
            s += std::to_string(coef);
            return;
        }
        if (coef != 1) s += std::to_string(coef);
        s += sym;
    };
    term(c.a, "");
    term(c.b, "E12");
    term(c.c, "E13");
    term(c.d, "E23");
    return s.empty() ? "0" : s;
}

}  // namespace

RingPtr make_ut3_ring(int m, const Caps& caps) {
    if (m < 2) throw InvalidParameter("ut3 modulus must be >= 2, got " + std::to_string(m));
    const long long order = (long long)m * m * m * m;
    if (order > caps.max_order)
        throw CapExceeded("ut3 order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(caps.max_order));
    const int n = int(order);

    std::vector<Ut3Coords> co(n);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        co[i] = ut3_coords(m, i);
        names[i] = ut3_name(co[i]);
    }

    std::vector<std::uint16_t> add(std::size_t(n) * n);
    std::vector<std::uint16_t> mul(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        const Ut3Coords x = co[i];
        for (int j = 0; j < n; ++j) {
            const Ut3Coords y = co[j];
            add[std::size_t(i) * n + j] = std::uint16_t(ut3_index(
                m, {(x.a + y.a) % m, (x.b + y.b) % m, (x.c + y.c) % m, (x.d + y.d) % m}));
            // (aI + bE12 + cE13 + dE23)(a'I + b'E12 + c'E13 + d'E23):
            // the only nonzero product of strict-upper units is E12*E23 = E13.
            mul[std::size_t(i) * n + j] = std::uint16_t(
                ut3_index(m, {(x.a * y.a) % m, (x.a * y.b + x.b * y.a) % m,
                              (x.a * y.c + x.b * y.d + x.c * y.a) % m,
                              (x.a * y.d + x.d * y.a) % m}));
        }
    }

    const int one = ut3_index(m, {1 % m, 0, 0, 0});
    return FiniteRing::create(std::move(add), std::move(mul), 0, one, std::move(names),
                              "ut3:" + std::to_string(m), caps);
}

RingPtr make_product_ring(const std::vector<RingPtr>& factors, const Caps& caps) {
    if (factors.size() < 2) throw InvalidParameter("product needs at least two factors");
    for (const auto& f : factors)
        if (!f) throw InvalidParameter("product factor must be non-null");

    long long order = 1;
    for (const auto& f : factors) {
        order *= f->order();
        if (order > caps.max_order)
            throw CapExceeded("product order exceeds cap " + std::to_string(caps.max_order));
    }
    const int n = int(order);
    const int k = int(factors.size());

    std::vector<std::vector<int>> coords(n, std::vector<int>(k));
    for (int i = 0; i < n; ++i) {
        int x = i;
        for (int j = k - 1; j >= 0; --j) {
            coords[i][j] = x % factors[j]->order();
            x /= factors[j]->order();
        }
    }
    auto index_of = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int j = 0; j < k; ++j) idx = idx * factors[j]->order() + c[j];
        return idx;
    };

    std::vector<std::uint16_t> add(std::size_t(n) * n);
    std::vector<std::uint16_t> mul(std::size_t(n) * n);
    std::vector<int> tmp(k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int t = 0; t < k; ++t) tmp[t] = factors[t]->add(coords[i][t], coords[j][t]);
            add[std::size_t(i) * n + j] = std::uint16_t(index_of(tmp));
            for (int t = 0; t < k; ++t) tmp[t] = factors[t]->mul(coords[i][t], coords[j][t]);
            mul[std::size_t(i) * n + j] = std::uint16_t(index_of(tmp));
        }

    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> parts(k);
        for (int t = 0; t < k; ++t) parts[t] = factors[t]->name(coords[i][t]);
        names[i] = "(" + join(parts, ",") + ")";
    }

    for (int t = 0; t < k; ++t) tmp[t] = factors[t]->zero();
    const int zero = index_of(tmp);
    for (int t = 0; t < k; ++t) tmp[t] = factors[t]->one();
    const int one = index_of(tmp);

    std::vector<std::string> tags(k);
    for (int t = 0; t < k; ++t) tags[t] = factors[t]->construction_tag();

    return FiniteRing::create(std::move(add), std::move(mul), zero, one, std::move(names),
                              "product:" + join(tags, "+"), caps);
}

// --- RingSpec ---

RingSpec RingSpec::cyclic(int n) {
    RingSpec s;
    s.kind = Kind::cyclic;
    s.n = n;
    return s;
}

RingSpec RingSpec::ut3(int m) {
    RingSpec s;
    s.kind = Kind::ut3;
    s.n = m;
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::product;
    s.factors = std::move(factors);
    return s;
}

void RingSpec::validate() const {
    switch (kind) {
        case Kind::cyclic:
            if (n < 1) throw InvalidParameter("cyclic modulus must be >= 1");
            break;
        case Kind::ut3:
            if (n < 2) throw InvalidParameter("ut3 modulus must be >= 2");
            break;
        case Kind::product:
            if (factors.size() < 2) throw InvalidParameter("product spec needs >= 2 factors");
            for (const auto& f : factors) f.validate();
            break;
        case Kind::quotient:
            if (!base) throw InvalidParameter("quotient spec needs a base ring");
            base->validate();
            break;
        case Kind::tables:
            if (path.empty()) throw InvalidParameter("tables spec needs a path");
            break;
    }
}

std::string RingSpec::to_string() const {
    switch (kind) {
        case Kind::cyclic:
            return "cyclic:" + std::to_string(n);
        case Kind::ut3:
            return "ut3:" + std::to_string(n);
        case Kind::product: {
            std::vector<std::string> parts;
            parts.reserve(factors.size());
            for (const auto& f : factors) parts.push_back(f.to_string());
            return "product:" + join(parts, "+");
        }
        case Kind::quotient: {
            std::vector<std::string> gens;
            gens.reserve(quotient_gens.size());
            for (int g : quotient_gens) gens.push_back(std::to_string(g));
            return base->to_string() + "/(" + join(gens, ",") + ")";
        }
        case Kind::tables:
            return "tables:" + path;
    }
    return "";
}

RingSpec RingSpec::parse(const std::string& text) {
    auto starts = [&](const char* p) { return text.rfind(p, 0) == 0; };
    auto tail_int = [&](std::size_t off) {
        const std::string rest = text.substr(off);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos ||
            rest.size() > 7)
            throw InvalidParameter("expected a number in ring spec: " + text);
        return std::stoi(rest);
    };
    if (starts("cyclic:")) {
        RingSpec s = cyclic(tail_int(7));
        s.validate();
        return s;
    }
    if (starts("ut3:")) {
        RingSpec s = ut3(tail_int(4));
        s.validate();
        return s;
    }
    if (starts("product:")) {
        const std::string rest = text.substr(8);
        std::vector<RingSpec> factors;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t next = rest.find('+', pos);
            if (next == std::string::npos) next = rest.size();
            const std::string part = rest.substr(pos, next - pos);
            if (part.rfind("product:", 0) == 0)
                throw InvalidParameter(
                    "nested inline products are not supported; use a corpus file");
            factors.push_back(parse(part));
            pos = next + 1;
        }
        if (factors.size() < 2)
            throw InvalidParameter("product spec needs at least two factors: " + text);
        RingSpec s = product(std::move(factors));
        s.validate();
        return s;
    }
    if (starts("tables:")) {
        RingSpec s;
        s.kind = Kind::tables;
        s.path = text.substr(7);
        s.validate();
        return s;
    }
    throw InvalidParameter("unrecognized ring spec: \"" + text +
                           "\" (expected cyclic:N, ut3:M, product:A+B, or tables:PATH)");
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.kind != b.kind || a.n != b.n || a.path != b.path ||
        a.quotient_gens != b.quotient_gens || a.factors != b.factors)
        return false;
    if (bool(a.base) != bool(b.base)) return false;
    return !a.base || *a.base == *b.base;
}

// --- table file I/O ---

namespace {

RingPtr read_tables_impl(std::istream& in, const Caps& caps, const std::string& tag) {
    long long n = 0;
    if (!(in >> n)) throw InvalidParameter("table stream: missing order");
    if (n < 1) throw InvalidParameter("table stream: order must be >= 1");
    if (n > caps.max_order)
        throw CapExceeded("table stream: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.max_order));
    std::vector<std::uint16_t> add(std::size_t(n) * n);
    std::vector<std::uint16_t> mul(std::size_t(n) * n);
    auto read_table = [&](std::vector<std::uint16_t>& tbl, const char* which) {
        for (auto& e : tbl) {
            long long v = 0;
            if (!(in >> v))
                throw InvalidParameter(std::string("table stream: truncated ") + which +
                                       " table");
            if (v < 0 || v > 65535)
                throw InvalidParameter(std::string("table stream: ") + which +
                                       " entry out of range: " + std::to_string(v));
            e = std::uint16_t(v);
        }
    };
    read_table(add, "addition");
    read_table(mul, "multiplication");
    long long zero = 0, one = 0;
    if (!(in >> zero >> one)) throw InvalidParameter("table stream: missing zero/one line");
    return FiniteRing::create(std::move(add), std::move(mul), int(zero), int(one), {}, tag,
                              caps);
}

}  // namespace

RingPtr read_table_stream(std::istream& in, const Caps& caps) {
    return read_tables_impl(in, caps, "tables");
}

RingPtr read_table_file(const std::string& path, const Caps& caps) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open table file: " + path);
    return read_tables_impl(in, caps, "tables:" + path);
}

void write_table_stream(const FiniteRing& ring, std::ostream& out) {
    const int n = ring.order();
    out << n << "\n";
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << ring.add(a, b);
        out << "\n";
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) out << (b ? " " : "") << ring.mul(a, b);
        out << "\n";
    }
    out << ring.zero() << " " << ring.one() << "\n";
}

}  // namespace nilring
