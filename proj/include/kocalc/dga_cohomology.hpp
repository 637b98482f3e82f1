#pragma once

#include <kocalc/steenrod.hpp>

namespace kocalc {

/* Dimensions of H^d(A, d') = ker / im for each even degree d. */
struct CohomologyDims {
    int top_degree = 0;
    std::vector<std::size_t> dims;  /* index d/2 */

    std::size_t dim(int degree) const
    {
        if (degree < 0 || degree % 2 || degree > top_degree)
            return 0;
        return dims[std::size_t(degree / 2)];
    }

    std::size_t total() const
    {
        std::size_t n = 0;
        for (std::size_t d : dims)
            n += d;
        return n;
    }
};

/* Kernel-modulo-image dimensions in one pass over the degreewise matrices.
 * The incoming map at degree 0 and the outgoing map at top_degree are zero. */
CohomologyDims cohomology_dims(const Differential& d);

/* Kernel vectors completing the image to a basis of the kernel, chosen as the
 * canonical reduced completion of the image echelon basis. */
std::vector<Element> cohomology_representatives(const Differential& d, int degree);

} // namespace kocalc
