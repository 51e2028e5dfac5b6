#include "superbi/presets.hpp"

#include <stdexcept>

#include "superbi/dsl.hpp"

namespace superbi {

namespace {

constexpr std::string_view kWitt = R"(# Witt algebra
algebra witt {
  generators {
    L(m): even, lattice Z;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n);
  }
}
)";

constexpr std::string_view kVirasoro = R"(# Virasoro algebra
algebra virasoro {
  generators {
    L(m): even, lattice Z;
    C: even, central;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n) + 1/12*(m^3-m)*C delta(m+n);
  }
}
)";

constexpr std::string_view kThv = R"(# centerless twisted Heisenberg-Virasoro algebra
algebra thv-centerless {
  generators {
    L(m): even, lattice Z;
    I(m): even, lattice Z;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n);
    [L(m), I(n)] = -n*I(m+n);
    [I(m), I(n)] = 0;
  }
}
)";

constexpr std::string_view kNs2Centerless = R"(# N=2 Neveu-Schwarz superalgebra, centerless
algebra ns2-centerless {
  generators {
    L(m): even, lattice Z;
    I(m): even, lattice Z;
    G+(r): odd, lattice Z+1/2;
    G-(r): odd, lattice Z+1/2;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n);
    [I(m), I(n)] = 0;
    [L(m), I(n)] = -n*I(m+n);
    [L(m), G+(r)] = (m/2-r)*G+(m+r);
    [L(m), G-(r)] = (m/2-r)*G-(m+r);
    [I(m), G+(r)] = G+(m+r);
    [I(m), G-(r)] = -G-(m+r);
    [G+(r), G-(s)] = 2*L(r+s) + (r-s)*I(r+s);
    [G+(r), G+(s)] = 0;
    [G-(r), G-(s)] = 0;
  }
}
)";

constexpr std::string_view kNs2Central = R"(# N=2 Neveu-Schwarz superalgebra with its central extension
algebra ns2-central {
  generators {
    L(m): even, lattice Z;
    I(m): even, lattice Z;
    G+(r): odd, lattice Z+1/2;
    G-(r): odd, lattice Z+1/2;
    C: even, central;
  }
  brackets {
    [L(m), L(n)] = (m-n)*L(m+n) + 1/12*(m^3-m)*C delta(m+n);
    [I(m), I(n)] = 1/3*m*C delta(m+n);
    [L(m), I(n)] = -n*I(m+n);
    [L(m), G+(r)] = (m/2-r)*G+(m+r);
    [L(m), G-(r)] = (m/2-r)*G-(m+r);
    [I(m), G+(r)] = G+(m+r);
    [I(m), G-(r)] = -G-(m+r);
    [G+(r), G-(s)] = 2*L(r+s) + (r-s)*I(r+s) + 1/3*(r^2-1/4)*C delta(r+s);
    [G+(r), G+(s)] = 0;
    [G-(r), G-(s)] = 0;
  }
}
)";

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"witt", "virasoro", "thv-centerless", "ns2-centerless",
                                                "ns2-central"};
    return names;
}

std::string_view preset_source(std::string_view name) {
    if (name == "witt") return kWitt;
    if (name == "virasoro") return kVirasoro;
    if (name == "thv-centerless") return kThv;
    if (name == "ns2-centerless") return kNs2Centerless;
    if (name == "ns2-central") return kNs2Central;
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

AlgebraSpec preset(std::string_view name) { return parse_spec(preset_source(name)); }

}  // namespace superbi
