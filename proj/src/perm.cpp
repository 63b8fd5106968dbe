#include "perm.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gfv {

Perm Perm::identity(unsigned n) {
    Perm p;
    p.img.resize(n);
    for (unsigned i = 0; i < n; ++i) p.img[i] = static_cast<std::uint16_t>(i);
    return p;
}

Perm Perm::mul(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = o.img[img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<std::uint16_t>(i);
    return r;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] != i) return false;
    return true;
}

int Perm::sign() const {
    std::vector<char> seen(img.size(), 0);
    int s = 1;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = img[j];
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

int Perm::sign_on(const std::vector<char>& mask) const {
    // restriction must permute the masked points among themselves
    std::vector<char> seen(img.size(), 0);
    int s = 1;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (!mask[i] || seen[i]) continue;
        unsigned len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            if (!mask[j]) throw std::runtime_error("restriction does not preserve block");
            seen[j] = 1;
            j = img[j];
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Perm Perm::from_cycles(const std::string& s, unsigned degree) {
    Perm p = identity(degree);
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') {
            ++i;
            continue;
        }
        std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::runtime_error("unbalanced cycle");
        std::string body = s.substr(i + 1, close - i - 1);
        for (auto& c : body)
            if (c == ',') c = ' ';
        std::istringstream bs(body);
        std::vector<unsigned> pts;
        unsigned v;
        while (bs >> v) {
            if (v < 1 || v > degree) throw std::runtime_error("cycle point out of range");
            pts.push_back(v - 1);
        }
        for (std::size_t k = 0; k < pts.size(); ++k)
            p.img[pts[k]] = static_cast<std::uint16_t>(pts[(k + 1) % pts.size()]);
        i = close + 1;
    }
    return p;
}

std::string Perm::to_cycles() const {
    std::ostringstream os;
    std::vector<char> seen(img.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (seen[i] || img[i] == i) {
            seen[i] = 1;
            continue;
        }
        os << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) os << ',';
            os << (j + 1);
            first = false;
            seen[j] = 1;
            j = img[j];
        }
        os << ')';
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

PermDataFile load_perm_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    PermDataFile out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (out.title.empty() && line.size() > 2) out.title = line.substr(2);
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "degree") {
            ls >> out.degree;
        } else if (key == "order") {
            std::string v;
            ls >> v;
            out.order = mpz_class(v);
        } else if (!key.empty() && key[0] == '(') {
            if (out.degree == 0) throw std::runtime_error("generator before degree in " + path);
            out.gens.push_back(Perm::from_cycles(line, out.degree));
        }
    }
    if (out.degree == 0 || out.gens.empty()) throw std::runtime_error("bad perm data " + path);
    return out;
}

}  // namespace gfv
