#include "zcz/setfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "json.hpp"

namespace zcz {
namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

long long parse_ll(const std::string& text, const char* what) {
    long long out = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError(std::string("setfile: bad ") + what + " value '" + text + "'");
    return out;
}

double parse_dbl(const std::string& text, const char* what) {
    double out = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError(std::string("setfile: bad ") + what + " value '" + text + "'");
    return out;
}

std::string claim_field(const SetClaim& c) {
    if (c.kind == SetClaim::Kind::Zcz) return "claim=zcz:" + std::to_string(c.zcz);
    return "claim=delta:" + format_double(c.delta);
}

SequenceSet parse_text(const std::string& content) {
    std::istringstream in(content);
    std::string header;
    if (!std::getline(in, header)) throw ParseError("setfile: empty input");

    std::istringstream hs(header);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != "ZCZSET") throw ParseError("setfile: missing ZCZSET magic");
    if (version != "v1") throw ParseError("setfile: unsupported version '" + version + "'");

    std::string alphabet;
    long long n = -1, m = -1;
    std::optional<SetClaim> claim;
    std::string token;
    while (hs >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("setfile: bad header token '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "alphabet") {
            alphabet = value;
        } else if (key == "N") {
            n = parse_ll(value, "N");
        } else if (key == "M") {
            m = parse_ll(value, "M");
        } else if (key == "claim") {
            const auto colon = value.find(':');
            if (colon == std::string::npos) throw ParseError("setfile: bad claim '" + value + "'");
            const std::string kind = value.substr(0, colon);
            const std::string num = value.substr(colon + 1);
            if (kind == "zcz")
                claim = SetClaim::zcz_claim(parse_ll(num, "claim"));
            else if (kind == "delta")
                claim = SetClaim::delta_claim(parse_dbl(num, "claim"));
            else
                throw ParseError("setfile: unknown claim kind '" + kind + "'");
        } else {
            throw ParseError("setfile: unknown header key '" + key + "'");
        }
    }
    if (alphabet.empty() || n < 1 || m < 1)
        throw ParseError("setfile: header must carry alphabet, N and M");

    int p = 0;
    const bool ternary = alphabet == "ternary";
    if (!ternary) {
        const long long pv = parse_ll(alphabet, "alphabet");
        if (pv < 1 || pv > 10) throw ParseError("setfile: text alphabet must be ternary or p in [1, 10]");
        p = static_cast<int>(pv);
    }

    std::vector<Sequence> members;
    members.reserve(static_cast<std::size_t>(m));
    std::string line;
    for (long long row = 0; row < m; ++row) {
        if (!std::getline(in, line)) throw ParseError("setfile: expected " + std::to_string(m) + " body lines");
        if (static_cast<long long>(line.size()) != n)
            throw ParseError("setfile: body line " + std::to_string(row + 1) + " has length " +
                             std::to_string(line.size()) + ", expected " + std::to_string(n));
        if (ternary) {
            std::vector<int> trits(line.size());
            for (std::size_t i = 0; i < line.size(); ++i) {
                switch (line[i]) {
                    case '+': trits[i] = 1; break;
                    case '-': trits[i] = -1; break;
                    case '0': trits[i] = 0; break;
                    default:
                        throw ParseError(std::string("setfile: bad ternary character '") + line[i] + "'");
                }
            }
            members.push_back(Sequence::from_ternary(trits));
        } else {
            std::vector<int> digits(line.size());
            for (std::size_t i = 0; i < line.size(); ++i) {
                const char c = line[i];
                if (c < '0' || c >= static_cast<char>('0' + p))
                    throw ParseError(std::string("setfile: digit '") + c + "' out of range for alphabet " +
                                     std::to_string(p));
                digits[i] = c - '0';
            }
            members.push_back(Sequence::from_digits(std::move(digits), p));
        }
    }
    while (std::getline(in, line)) {
        if (!line.empty()) throw ParseError("setfile: trailing content after " + std::to_string(m) + " body lines");
    }
    return SequenceSet(std::move(members), claim);
}

SequenceSet parse_json(const std::string& content) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("setfile: invalid JSON: ") + e.what());
    }
    try {
        if (doc.value("format", "") != "ZCZSET") throw ParseError("setfile: missing ZCZSET format field");
        if (doc.value("version", 0) != 1) throw ParseError("setfile: unsupported JSON version");
        const long long n = doc.at("N").get<long long>();
        const long long m = doc.at("M").get<long long>();
        std::optional<SetClaim> claim;
        if (doc.contains("claim")) {
            const auto& c = doc.at("claim");
            if (c.contains("zcz"))
                claim = SetClaim::zcz_claim(c.at("zcz").get<long long>());
            else if (c.contains("delta"))
                claim = SetClaim::delta_claim(c.at("delta").get<double>());
            else
                throw ParseError("setfile: claim must carry zcz or delta");
        }
        const auto& rows = doc.at("members");
        if (static_cast<long long>(rows.size()) != m)
            throw ParseError("setfile: M does not match the member count");
        std::vector<Sequence> members;
        members.reserve(rows.size());
        for (const auto& row : rows) {
            if (row.contains("digits")) {
                const int order = row.at("order").get<int>();
                std::vector<int> digits = row.at("digits").get<std::vector<int>>();
                if (order < 1) throw ParseError("setfile: member order must be positive");
                for (int d : digits)
                    if (d < -1 || d >= order) throw ParseError("setfile: member digit out of range");
                members.push_back(Sequence::from_unit_digits(std::move(digits), order));
            } else if (row.contains("entries")) {
                std::vector<std::complex<double>> entries;
                for (const auto& pair : row.at("entries")) {
                    if (!pair.is_array() || pair.size() != 2)
                        throw ParseError("setfile: entries must be [re, im] pairs");
                    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
                }
                members.push_back(Sequence::from_complex(std::move(entries)));
            } else {
                throw ParseError("setfile: member needs digits or entries");
            }
            if (static_cast<long long>(members.back().length()) != n)
                throw ParseError("setfile: member length does not match N");
        }
        return SequenceSet(std::move(members), claim);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("setfile: malformed document: ") + e.what());
    }
}

}  // namespace

bool text_representable(const SequenceSet& s) {
    const Alphabet a = s.common_alphabet();
    if (a.kind == AlphabetKind::Ternary) return true;
    return a.kind == AlphabetKind::PPhase && a.p <= 10;
}

std::string write_setfile_text(const SequenceSet& s) {
    const Alphabet a = s.common_alphabet();
    if (!text_representable(s))
        throw ParseError("setfile: set is not text-representable; use the JSON writer");
    std::ostringstream out;
    out << "ZCZSET v1 alphabet=" << (a.kind == AlphabetKind::Ternary ? "ternary" : std::to_string(a.p))
        << " N=" << s.length() << " M=" << s.size();
    if (s.claim()) out << ' ' << claim_field(*s.claim());
    out << '\n';
    for (const Sequence& member : s.members()) {
        const std::vector<int> digits =
            a.kind == AlphabetKind::Ternary ? member.digits_at_order(2) : member.digits_at_order(a.p);
        for (int d : digits) {
            if (a.kind == AlphabetKind::Ternary)
                out << (d == -1 ? '0' : d == 0 ? '+' : '-');
            else
                out << static_cast<char>('0' + d);
        }
        out << '\n';
    }
    return out.str();
}

std::string write_setfile_json(const SequenceSet& s) {
    nlohmann::ordered_json doc;
    doc["format"] = "ZCZSET";
    doc["version"] = 1;
    doc["N"] = s.length();
    doc["M"] = s.size();
    if (s.claim()) {
        if (s.claim()->kind == SetClaim::Kind::Zcz)
            doc["claim"] = {{"zcz", s.claim()->zcz}};
        else
            doc["claim"] = {{"delta", s.claim()->delta}};
    }
    doc["members"] = nlohmann::ordered_json::array();
    for (const Sequence& member : s.members()) {
        nlohmann::ordered_json row;
        if (member.is_exact()) {
            row["order"] = member.root_order();
            row["digits"] = member.digits();
        } else {
            auto entries = nlohmann::ordered_json::array();
            for (const std::complex<double>& z : member.entries())
                entries.push_back({z.real(), z.imag()});
            row["entries"] = std::move(entries);
        }
        doc["members"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string write_setfile(const SequenceSet& s) {
    return text_representable(s) ? write_setfile_text(s) : write_setfile_json(s);
}

SequenceSet parse_setfile(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("setfile: empty input");
    if (content[first] == '{') return parse_json(content);
    return parse_text(content);
}

SequenceSet load_setfile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("setfile: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_setfile(buf.str());
}

void save_setfile(const SequenceSet& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("setfile: cannot write '" + path + "'");
    out << write_setfile(s);
}

}  // namespace zcz
