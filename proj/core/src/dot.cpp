#include "lattica/dot.hpp"

#include <sstream>

namespace lattica {

std::string to_dot(const Structure& s) {
    const FiniteLattice& L = lattice_of(s);
    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < L.size(); ++i) {
        os << "  n" << i << " [label=\"";
        if (!L.labels().empty())
            os << L.labels()[i];
        else
            os << i;
        os << "\"];\n";
    }
    for (auto [x, y] : L.covers()) os << "  n" << x << " -> n" << y << ";\n";
    if (const auto* inv = involution_of(s)) {
        for (int x = 0; x < L.size(); ++x)
            if ((*inv)[x] > x)
                os << "  n" << x << " -> n" << (*inv)[x]
                   << " [style=dashed, dir=none, constraint=false];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace lattica
