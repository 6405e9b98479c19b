#include "nilring/ideal.hpp"
#include "nilring/ring.hpp"

namespace nilring {

RingPtr RingSpec::build(const Caps& caps) const {
    validate();
    switch (kind) {
        case Kind::cyclic:
            return make_cyclic_ring(n, caps);
        case Kind::ut3:
            return make_ut3_ring(n, caps);
        case Kind::product: {
            std::vector<RingPtr> built;
            built.reserve(factors.size());
            for (const auto& f : factors) built.push_back(f.build(caps));
            return make_product_ring(built, caps);
        }
        case Kind::quotient: {
            RingPtr base_ring = base->build(caps);
            Ideal ideal = generate_ideal(base_ring, quotient_gens, Sidedness::two_sided);
            return make_quotient_ring(base_ring, ideal, caps).ring;
        }
        case Kind::tables:
            return read_table_file(path, caps);
    }
    throw InvalidParameter("unreachable ring spec kind");
}

}  // namespace nilring
