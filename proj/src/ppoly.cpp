#include "hurwitz/ppoly.hpp"

#include "hurwitz/characters.hpp"

namespace hurwitz {

PPoly<Rat> schur_in_p(const Partition& lambda) {
    PPoly<Rat> out;
    for (const auto& mu : partitions_of(lambda.size()))
        out.add_term(mu, Rat(character(lambda, mu)) / Rat(z_factor(mu)));
    return out;
}

} // namespace hurwitz
