#include "relzk/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace relzk::io {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::uint8_t> parse_bitstring(const std::string& token) {
    std::vector<std::uint8_t> bits;
    bits.reserve(token.size());
    for (char ch : token) {
        if (ch != '0' && ch != '1') throw DecodeError("bit string may only contain 0 and 1");
        bits.push_back(ch == '1' ? 1 : 0);
    }
    return bits;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DecodeError("cannot open " + path);
    return in;
}

} // namespace

std::string write_subset_sum(const SsRecord& record) {
    std::ostringstream os;
    os << "# subset-sum instance\n";
    os << "n " << record.inst.size() << "\n";
    os << "s";
    for (const auto& v : record.inst.s) os << ' ' << v.str();
    os << "\n";
    os << "k " << record.inst.k.str() << "\n";
    if (record.witness) {
        os << "v " << bits_to_string(record.witness->v) << "\n";
    }
    return os.str();
}

SsRecord read_subset_sum(std::istream& in) {
    SsRecord record;
    std::optional<std::size_t> n;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "n") {
            std::size_t value = 0;
            if (!(ls >> value)) throw DecodeError("bad n line");
            n = value;
        } else if (key == "s") {
            std::string tok;
            while (ls >> tok) record.inst.s.emplace_back(tok);
        } else if (key == "k") {
            std::string tok;
            if (!(ls >> tok)) throw DecodeError("bad k line");
            record.inst.k = BigInt(tok);
        } else if (key == "v") {
            std::string tok;
            if (!(ls >> tok)) throw DecodeError("bad v line");
            record.witness = ss::SubsetSumWitness{parse_bitstring(tok)};
        } else {
            throw DecodeError("unknown subset-sum record key: " + key);
        }
    }
    if (!n) throw DecodeError("missing n line");
    if (record.inst.s.size() != *n) {
        throw DecodeError("s has " + std::to_string(record.inst.s.size()) + " entries, n is " +
                          std::to_string(*n));
    }
    for (const auto& v : record.inst.s) {
        if (v < 1) throw DecodeError("set elements must be positive");
    }
    if (record.inst.k < 0) throw DecodeError("target must be non-negative");
    if (record.witness && record.witness->v.size() != *n) {
        throw DecodeError("witness length does not match n");
    }
    return record;
}

SsRecord read_subset_sum_file(const std::string& path) {
    auto in = open_input(path);
    return read_subset_sum(in);
}

void write_subset_sum_file(const std::string& path, const SsRecord& record) {
    write_text_file(path, write_subset_sum(record));
}

std::string write_dimacs(const CnfRecord& record) {
    std::ostringstream os;
    if (record.assignment) {
        os << "c assignment " << bits_to_string(record.assignment->bits) << "\n";
    }
    os << "p cnf " << record.phi.var_count << ' ' << record.phi.clause_count() << "\n";
    for (const auto& clause : record.phi.clauses) {
        for (const auto& lit : clause) {
            os << (lit.negated ? "-" : "") << lit.var << ' ';
        }
        os << "0\n";
    }
    return os.str();
}

CnfRecord read_dimacs(std::istream& in) {
    CnfRecord record;
    bool seen_header = false;
    std::size_t expected_clauses = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") {
            std::string tag;
            if (ls >> tag && tag == "assignment") {
                std::string bits;
                if (!(ls >> bits)) throw DecodeError("bad assignment comment");
                record.assignment = sat::Assignment{parse_bitstring(bits)};
            }
            continue;
        }
        if (first == "p") {
            std::string fmt;
            if (!(ls >> fmt) || fmt != "cnf") throw DecodeError("expected 'p cnf' header");
            std::size_t vars = 0, clauses = 0;
            if (!(ls >> vars >> clauses)) throw DecodeError("bad problem line");
            record.phi.var_count = static_cast<unsigned>(vars);
            expected_clauses = clauses;
            seen_header = true;
            continue;
        }
        if (!seen_header) throw DecodeError("clause before 'p cnf' header");
        // clause line: exactly three literals then 0
        std::vector<long> lits;
        long v = std::stol(first);
        while (v != 0) {
            lits.push_back(v);
            if (!(ls >> v)) throw DecodeError("clause line missing terminating 0");
        }
        if (lits.size() != 3) {
            throw DecodeError("clause has " + std::to_string(lits.size()) +
                              " literals; this format is restricted to width 3");
        }
        sat::Clause clause;
        for (std::size_t i = 0; i < 3; ++i) {
            long lit = lits[i];
            unsigned var = static_cast<unsigned>(lit < 0 ? -lit : lit);
            if (var < 1 || var > record.phi.var_count) {
                throw DecodeError("literal " + std::to_string(lit) + " out of range");
            }
            clause[i] = sat::Literal{var, lit < 0};
        }
        record.phi.clauses.push_back(clause);
    }
    if (!seen_header) throw DecodeError("missing 'p cnf' header");
    if (record.phi.clause_count() != expected_clauses) {
        throw DecodeError("clause count does not match the header");
    }
    if (record.assignment && record.assignment->bits.size() != record.phi.var_count) {
        throw DecodeError("assignment length does not match the variable count");
    }
    return record;
}

CnfRecord read_dimacs_file(const std::string& path) {
    auto in = open_input(path);
    return read_dimacs(in);
}

void write_dimacs_file(const std::string& path, const CnfRecord& record) {
    write_text_file(path, write_dimacs(record));
}

std::string write_game(const games::FiniteGame& game) {
    std::ostringstream os;
    os << "# finite game: V = 1 tuples listed as 'win x y a b'\n";
    os << "alphabets " << game.alice_inputs() << ' ' << game.bob_inputs() << ' '
       << game.alice_outputs() << ' ' << game.bob_outputs() << "\n";
    for (std::size_t x = 0; x < game.alice_inputs(); ++x)
        for (std::size_t y = 0; y < game.bob_inputs(); ++y)
            for (std::size_t a = 0; a < game.alice_outputs(); ++a)
                for (std::size_t b = 0; b < game.bob_outputs(); ++b)
                    if (game.win(x, y, a, b)) {
                        os << "win " << x << ' ' << y << ' ' << a << ' ' << b << "\n";
                    }
    return os.str();
}

games::FiniteGame read_game(std::istream& in) {
    std::optional<games::FiniteGame> game;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "alphabets") {
            std::size_t ia = 0, ib = 0, oa = 0, ob = 0;
            if (!(ls >> ia >> ib >> oa >> ob)) throw DecodeError("bad alphabets line");
            game.emplace(ia, ib, oa, ob);
        } else if (key == "win") {
            if (!game) throw DecodeError("win line before alphabets");
            std::size_t x = 0, y = 0, a = 0, b = 0;
            if (!(ls >> x >> y >> a >> b)) throw DecodeError("bad win line");
            if (x >= game->alice_inputs() || y >= game->bob_inputs() ||
                a >= game->alice_outputs() || b >= game->bob_outputs()) {
                throw DecodeError("win tuple out of range");
            }
            game->set_win(x, y, a, b, true);
        } else {
            throw DecodeError("unknown game record key: " + key);
        }
    }
    if (!game) throw DecodeError("missing alphabets line");
    return *game;
}

games::FiniteGame read_game_file(const std::string& path) {
    auto in = open_input(path);
    return read_game(in);
}

void write_game_file(const std::string& path, const games::FiniteGame& game) {
    write_text_file(path, write_game(game));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DecodeError("cannot write " + path);
    out << content;
}

} // namespace relzk::io
