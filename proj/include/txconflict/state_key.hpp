/*
   Copyright 2026 The txconflict Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace txconflict {

enum class StateKeyKind {
    kEoaAccount,       // externally owned account, address granularity
    kContractStorage,  // one storage slot inside one contract
    kContractAccount,  // contract address itself (balance/code presence)
    kSolanaAccount,    // Solana account pubkey
    kGeneric,          // opaque synthetic key
};

//! A uniquely identifiable unit of blockchain state. Two keys conflict-match
//! iff they are equal; equality is exact on (kind, payload), so storage slots
//! of the same contract stay distinct and an EOA key never matches a contract
//! account key for the same address.
class StateKey {
  public:
    StateKey() = default;

    //! Factories validate and canonicalize payloads (hex is lowercased).
    //! Throw EncodingError on malformed input, naming the offending field.
    static StateKey eoa(std::string_view address);
    static StateKey contract_storage(std::string_view contract, std::string_view slot);
    static StateKey contract_account(std::string_view address);
    static StateKey solana_account(std::string_view pubkey);
    static StateKey generic(std::string_view name);

    StateKeyKind kind() const noexcept { return kind_; }

    //! Primary payload: address, pubkey or opaque name depending on kind.
    const std::string& address() const noexcept { return address_; }

    //! Storage slot, only meaningful for kContractStorage.
    const std::string& slot() const noexcept { return slot_; }

    //! Canonical textual encoding:
    //!   eoa:0x<40 hex> | slot:0x<40 hex>:0x<64 hex> | code:0x<40 hex> |
    //!   acct:<base58>  | gen:<name>
    //! Injective: decode(encode(k)) == k.
    std::string encode() const;
    static StateKey decode(std::string_view text);

    auto operator<=>(const StateKey&) const = default;
    bool operator==(const StateKey&) const = default;

  private:
    StateKey(StateKeyKind kind, std::string address, std::string slot)
        : kind_{kind}, address_{std::move(address)}, slot_{std::move(slot)} {}

    StateKeyKind kind_{StateKeyKind::kGeneric};
    std::string address_;
    std::string slot_;
};

//! Lowercases and validates a 0x-prefixed hex string of exactly `hex_digits`
//! digits; `field` names the input in error messages.
std::string normalize_hex(std::string_view text, std::size_t hex_digits, std::string_view field);

//! True iff `text` is non-empty and uses only base58 characters.
bool is_base58(std::string_view text) noexcept;

}  // namespace txconflict

template <>
struct std::hash<txconflict::StateKey> {
    std::size_t operator()(const txconflict::StateKey& key) const noexcept {
        std::size_t h = std::hash<std::string>{}(key.address());
        h ^= std::hash<std::string>{}(key.slot()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h ^ (static_cast<std::size_t>(key.kind()) << 1);
    }
};
