#include "hamgame/errors.hpp"
#include "hamgame/types.hpp"

namespace hamgame {

std::string_view to_string(Player p) noexcept
{
    return p == Player::Maker ? "maker" : "breaker";
}

std::string_view to_string(Owner o) noexcept
{
    switch (o) {
    case Owner::Unclaimed: return "unclaimed";
    case Owner::Maker: return "maker";
    case Owner::Breaker: return "breaker";
    }
    return "?";
}

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::AlreadyClaimed: return "AlreadyClaimed";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::NoEligibleVertex: return "NoEligibleVertex";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::BoardFull: return "BoardFull";
    case Errc::IllegalTranscript: return "IllegalTranscript";
    case Errc::ParameterDomain: return "ParameterDomain";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::UnknownStrategy: return "UnknownStrategy";
    case Errc::EngineFault: return "EngineFault";
    case Errc::Io: return "Io";
    }
    return "?";
}

}  // namespace hamgame
