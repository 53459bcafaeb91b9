#include "lattica/report.hpp"

#include <sstream>

namespace lattica {

namespace {

CongruenceSet congruences_for(const Structure& s, Sig sig) {
    if (const auto* iv = std::get_if<InvolutionStructure>(&s)) return all_congruences(*iv, sig);
    return all_congruences(std::get<FiniteLattice>(s), sig);
}

void flag_line(std::ostringstream& os, const char* name, const TaxonomyFlag& f) {
    os << name << ": " << (f.ok ? "yes" : "no");
    if (!f.witness.empty()) {
        os << " [";
        for (size_t i = 0; i < f.witness.size(); ++i) os << (i ? ", " : "") << f.witness[i];
        os << "]";
    }
    if (!f.note.empty()) os << " (" << f.note << ")";
    os << "\n";
}

}  // namespace

StructureReport summarize(const Structure& s, const std::vector<Sig>& sigs,
                          const std::vector<int>& fixed) {
    const FiniteLattice& L = lattice_of(s);
    StructureReport r;
    r.n = L.size();
    r.bottom = L.bottom();
    r.top = L.top();
    r.with_involution = has_involution(s);
    r.with_weak = weak_of(s) != nullptr;
    r.distributive = is_distributive(L).ok;
    r.modular = is_modular(L).ok;
    if (const auto* iv = std::get_if<InvolutionStructure>(&s)) r.taxonomy = classify(*iv);

    for (Sig sig : sigs) {
        CongruenceSet C = congruences_for(s, sig);
        if (!fixed.empty()) C = fix_constants(C, fixed);
        CongruenceSummary cs;
        cs.sig = sig;
        cs.fixed = fixed;
        cs.count = C.size();
        cs.listing.reserve(C.size());
        for (const Partition& p : C.members) cs.listing.push_back(p.text());
        r.congruences.push_back(std::move(cs));
    }
    return r;
}

std::string render_text(const StructureReport& r, bool with_listing) {
    std::ostringstream os;
    os << "elements: " << r.n << " (bottom " << r.bottom << ", top " << r.top << ")\n";
    os << "involution: " << (r.with_involution ? "yes" : "no")
       << "  weak complement: " << (r.with_weak ? "yes" : "no") << "\n";
    os << "distributive: " << (r.distributive ? "yes" : "no")
       << "  modular: " << (r.modular ? "yes" : "no") << "\n";
    for (const CongruenceSummary& c : r.congruences) {
        os << "congruences[" << sig_name(c.sig);
        if (!c.fixed.empty()) {
            os << ", fixing";
            for (int x : c.fixed) os << ' ' << x;
        }
        os << "]: " << c.count << "\n";
        if (with_listing)
            for (const std::string& line : c.listing) os << "  " << line << "\n";
    }
    if (r.taxonomy) os << render_taxonomy(*r.taxonomy);
    return os.str();
}

std::string render_taxonomy(const TaxonomyReport& t) {
    std::ostringstream os;
    flag_line(os, "involutive", t.involutive);
    flag_line(os, "bounded", t.bounded);
    flag_line(os, "pseudo-kleene", t.pseudo_kleene);
    flag_line(os, "de-morgan", t.de_morgan);
    flag_line(os, "kleene", t.kleene);
    flag_line(os, "paraorthomodular", t.paraorthomodular);
    flag_line(os, "brouwer-zadeh", t.bz);
    flag_line(os, "pbz-star", t.pbz_star);
    flag_line(os, "antiortholattice", t.antiortholattice);
    return os.str();
}

}  // namespace lattica
