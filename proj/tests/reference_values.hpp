#pragma once
// Generated by tests/reference/generate_reference.py (mpmath, 50 digits).

namespace ref {

inline constexpr double gamma_4_5 = 1.1631728396567448929e+1;
inline constexpr double log_gamma_10_25 = 1.3368023671476046295e+1;
inline constexpr double digamma_3_7 = 1.1671535393615113859;
inline constexpr double trigamma_5_25 = 2.0976041229725416512e-1;
inline constexpr double th4_h_10 = 1.0319950145150511749e-3;
inline constexpr double bessel_i_2_3 = 2.2452124409299511546;
inline constexpr double struve_l_1_2 = 1.1027597873677158176;
inline constexpr double struve_m_1_0_5 = -2.0395212276737365307e-1;
inline constexpr double calm_0_1 = 9.8517007052660230881e-1;
inline constexpr double calm_dx_0_5_2_n2 = 9.1207899052422750447e-2;
inline constexpr double calm_dnu_2_0_5_m2 = 6.5607247486678358075e-2;
inline constexpr double calm_dnu_1_1_m1 = -1.6781487841485048667e-1;
inline constexpr double m_m0_499_1 = -2.9445057248109795823e-1;
inline constexpr double m_3_50 = -1.0589185121532174032e+2;
inline constexpr double m_prime_0_1 = 2.9822504943090495269e-1;
inline constexpr double m_prime_1_2 = -9.8213010709814983379e-2;
inline constexpr double delta_il_1_1 = -1.035522026699062155e-1;
inline constexpr double delta_il_0_6_2 = -2.3095438507254101394;
inline constexpr double delta_il_2_0_1 = -3.161109576913565691e-8;
inline constexpr double delta_il_2_3 = -1.882001973505467458;
inline constexpr double calm_fw_2_4 = 2.4081148723930165024e-1;
inline constexpr double calm_3_2 = 3.3322250684227197939e-1;
inline constexpr double turanian_1_1 = 6.3797816859463891004e-2;
inline constexpr double turanian_0_51_0_1 = 3.6608506509441244129e-2;
inline constexpr double calm_m0_45_6 = 2.2683836242626754106e-1;
inline constexpr double calm_5_30 = 3.7245050641659717624e-2;

} // namespace ref
