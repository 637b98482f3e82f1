#include <kocalc/dga_cohomology.hpp>

#include <stdexcept>

namespace kocalc {

CohomologyDims cohomology_dims(const Differential& d)
{
    const Presentation& p = d.presentation();
    CohomologyDims out;
    out.top_degree = p.top_degree();

    std::vector<std::size_t> ranks;
    for (int deg = 0; deg <= p.top_degree(); deg += 2)
        ranks.push_back(rank(d.matrix(deg)));

    for (int deg = 0; deg <= p.top_degree(); deg += 2) {
        std::size_t i = std::size_t(deg / 2);
        std::size_t kernel = p.dim_of_degree(deg) - ranks[i];
        std::size_t image_in = (deg == 0) ? 0 : ranks[i - 1];
        out.dims.push_back(kernel - image_in);
    }
    return out;
}

std::vector<Element> cohomology_representatives(const Differential& d, int degree)
{
    const Presentation& p = d.presentation();
    if (degree < 0 || degree % 2 || degree > p.top_degree())
        throw std::out_of_range("degree out of range");

    std::size_t n = p.dim_of_degree(degree);
    EchelonBasis span(n);
    if (degree >= 2) {
        const F2Matrix& in = d.matrix(degree - 2);
        for (std::size_t j = 0; j < in.cols(); ++j) {
            F2Vector col(n);
            for (std::size_t r = 0; r < n; ++r)
                if (in.get(r, j))
                    col.set(r);
            span.insert(std::move(col));
        }
    }

    std::vector<Element> reps;
    for (const F2Vector& k : kernel_basis(d.matrix(degree))) {
        F2Vector reduced = span.reduce(k);
        if (reduced.is_zero())
            continue;
        span.insert(reduced);
        reps.push_back(Element{degree, std::move(reduced)});
    }
    return reps;
}

} // namespace kocalc
