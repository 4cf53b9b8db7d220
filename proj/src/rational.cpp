#include "tropigon/rational.hpp"

#include "tropigon/error.hpp"

namespace tropigon {

std::string to_string(const Q& q) { return q.get_str(); }

Q parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
    size_t start = 0;
    while (start < s.size() && s[start] == ' ') ++start;
    s = s.substr(start);
    if (s.empty()) throw Error(ErrorCode::BadInput, "empty rational");
    Q q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::BadInput, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Z lcm_den(const Z& a, const Q& q) {
    Z r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), q.get_den_mpz_t());
    return r;
}

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParityMismatch: return "ParityMismatch";
        case ErrorCode::MaroniRange: return "MaroniRange";
        case ErrorCode::InvalidPolygon: return "InvalidPolygon";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::GenusZero: return "GenusZero";
        case ErrorCode::NotCanonical: return "NotCanonical";
        case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
        case ErrorCode::NonPositiveLength: return "NonPositiveLength";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::NotSmooth: return "NotSmooth";
        case ErrorCode::WrongPolygon: return "WrongPolygon";
        case ErrorCode::NotHarmonic: return "NotHarmonic";
        case ErrorCode::DegreeVaries: return "DegreeVaries";
        case ErrorCode::DegenerateVertex: return "DegenerateVertex";
        case ErrorCode::ContractedLoop: return "ContractedLoop";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::RHViolated: return "RHViolated";
        case ErrorCode::UnknownType: return "UnknownType";
        case ErrorCode::BadMaroniParameter: return "BadMaroniParameter";
        case ErrorCode::BadDivisor: return "BadDivisor";
        case ErrorCode::ForcedZeroViolated: return "ForcedZeroViolated";
        case ErrorCode::NegativeLength: return "NegativeLength";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParityMismatch: return 2;
        case ErrorCode::MaroniRange: return 3;
        case ErrorCode::BadMaroniParameter: return 3;
        case ErrorCode::BadInput: return 4;
        case ErrorCode::InvalidPolygon: return 4;
        case ErrorCode::Disconnected:
        case ErrorCode::GenusZero:
        case ErrorCode::NotCanonical:
        case ErrorCode::UnsupportedGenus:
        case ErrorCode::NonPositiveLength:
        case ErrorCode::UnknownType: return 5;
        case ErrorCode::NotRegular:
        case ErrorCode::NotSmooth:
        case ErrorCode::WrongPolygon: return 6;
        case ErrorCode::NotHarmonic:
        case ErrorCode::DegreeVaries:
        case ErrorCode::DegenerateVertex:
        case ErrorCode::ContractedLoop:
        case ErrorCode::LengthMismatch:
        case ErrorCode::RHViolated: return 7;
        case ErrorCode::BadDivisor: return 8;
        case ErrorCode::ForcedZeroViolated:
        case ErrorCode::NegativeLength: return 9;
    }
    return 1;
}

}  // namespace tropigon
