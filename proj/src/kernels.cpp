#include "nilring/kernels.hpp"

#include <climits>
#include <functional>

namespace nilring::kernels {

bool operator==(const AxiomIssue& a, const AxiomIssue& b) {
    return a.axiom == b.axiom && a.witness == b.witness;
}

namespace {

constexpr long long kNone = LLONG_MAX;

/// One validation pass. `row(a)` scans everything with first coordinate `a`
/// and returns the flattened index of the first violation in that slice, or
/// kNone. Flattening is lexicographic, so the minimum over rows is the
/// lexicographically first witness overall.
struct Pass {
    const char* axiom;
    int arity;  // how many witness slots the axiom uses
    std::function<long long(int)> row;
};

long long scan_serial(int n, const std::function<long long(int)>& row) {
    for (int a = 0; a < n; ++a) {
        long long hit = row(a);
        if (hit != kNone) return hit;
    }
    return kNone;
}

long long scan_parallel(int n, const std::function<long long(int)>& row) {
    long long best = kNone;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (int a = 0; a < n; ++a) {
        long long hit = row(a);
        if (hit < best) best = hit;
    }
    return best;
}

std::vector<Pass> make_passes(const TableView& t) {
    const int n = t.order;
    const int zero = t.zero;
    const int one = t.one;
    auto add = [t, n](int a, int b) { return int(t.add[std::size_t(a) * n + b]); };
    auto mul = [t, n](int a, int b) { return int(t.mul[std::size_t(a) * n + b]); };

    std::vector<Pass> passes;

    // Closure passes come first: until they succeed, table entries cannot be
    // used as indices by the later passes.
    passes.push_back({"additive-closure", 2, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              if (add(a, b) >= n) return (long long)a * n + b;
                          return kNone;
                      }});
    passes.push_back({"multiplicative-closure", 2, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              if (mul(a, b) >= n) return (long long)a * n + b;
                          return kNone;
                      }});
    passes.push_back({"identity-distinct", 1, [=](int a) -> long long {
                          if (n > 1 && one == zero && a == one) return a;
                          return kNone;
                      }});
    passes.push_back({"zero-element", 1, [=](int a) -> long long {
                          if (add(zero, a) != a || add(a, zero) != a) return a;
                          return kNone;
                      }});
    passes.push_back({"one-element", 1, [=](int a) -> long long {
                          if (mul(one, a) != a || mul(a, one) != a) return a;
                          return kNone;
                      }});
    passes.push_back({"additive-commutativity", 2, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              if (add(a, b) != add(b, a)) return (long long)a * n + b;
                          return kNone;
                      }});
    passes.push_back({"additive-inverses", 1, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              if (add(a, b) == zero) return kNone;
                          return a;
                      }});
    passes.push_back({"additive-associativity", 3, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              for (int c = 0; c < n; ++c)
                                  if (add(add(a, b), c) != add(a, add(b, c)))
                                      return ((long long)a * n + b) * n + c;
                          return kNone;
                      }});
    passes.push_back({"multiplicative-associativity", 3, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              for (int c = 0; c < n; ++c)
                                  if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                                      return ((long long)a * n + b) * n + c;
                          return kNone;
                      }});
    passes.push_back({"left-distributivity", 3, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              for (int c = 0; c < n; ++c)
                                  if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                                      return ((long long)a * n + b) * n + c;
                          return kNone;
                      }});
    passes.push_back({"right-distributivity", 3, [=](int a) -> long long {
                          for (int b = 0; b < n; ++b)
                              for (int c = 0; c < n; ++c)
                                  if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
                                      return ((long long)a * n + b) * n + c;
                          return kNone;
                      }});
    return passes;
}

std::optional<AxiomIssue> run_passes(const TableView& t, bool parallel) {
    const int n = t.order;
    for (const Pass& p : make_passes(t)) {
        long long hit = parallel ? scan_parallel(n, p.row) : scan_serial(n, p.row);
        if (hit == kNone) continue;
        AxiomIssue issue;
        issue.axiom = p.axiom;
        switch (p.arity) {
            case 1:
                issue.witness = {int(hit), 0, 0};
                break;
            case 2:
                issue.witness = {int(hit / n), int(hit % n), 0};
                break;
            default: {
                long long ab = hit / n;
                issue.witness = {int(ab / n), int(ab % n), int(hit % n)};
                break;
            }
        }
        return issue;
    }
    return std::nullopt;
}

std::uint8_t element_is_nilpotent(const TableView& t, int a) {
    const int n = t.order;
    int x = a;
    for (int k = 0; k < n; ++k) {
        if (x == t.zero) return 1;
        x = int(t.mul[std::size_t(x) * n + a]);
    }
    return x == t.zero ? 1 : 0;
}

}  // namespace

std::optional<AxiomIssue> find_axiom_violation_serial(const TableView& t) {
    return run_passes(t, false);
}

std::optional<AxiomIssue> find_axiom_violation_parallel(const TableView& t) {
    return run_passes(t, true);
}

std::optional<AxiomIssue> find_axiom_violation(const TableView& t, Mode mode) {
    return mode == Mode::parallel ? find_axiom_violation_parallel(t)
                                  : find_axiom_violation_serial(t);
}

std::vector<std::uint8_t> element_nilpotency_mask_serial(const TableView& t) {
    std::vector<std::uint8_t> mask(t.order, 0);
    for (int a = 0; a < t.order; ++a) mask[a] = element_is_nilpotent(t, a);
    return mask;
}

std::vector<std::uint8_t> element_nilpotency_mask_parallel(const TableView& t) {
    std::vector<std::uint8_t> mask(t.order, 0);
#pragma omp parallel for schedule(static)
    for (int a = 0; a < t.order; ++a) mask[a] = element_is_nilpotent(t, a);
    return mask;
}

std::vector<std::uint8_t> element_nilpotency_mask(const TableView& t, Mode mode) {
    return mode == Mode::parallel ? element_nilpotency_mask_parallel(t)
                                  : element_nilpotency_mask_serial(t);
}

bool tables_commutative(const TableView& t, Mode mode) {
    const int n = t.order;
    if (mode == Mode::serial) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (t.mul[std::size_t(a) * n + b] != t.mul[std::size_t(b) * n + a])
                    return false;
        return true;
    }
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (int a = 0; a < n; ++a) {
        bool row_ok = true;
        for (int b = a + 1; b < n; ++b)
            if (t.mul[std::size_t(a) * n + b] != t.mul[std::size_t(b) * n + a])
                row_ok = false;
        ok = ok && row_ok;
    }
    return ok;
}

}  // namespace nilring::kernels
