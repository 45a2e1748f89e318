#pragma once

#include <optional>
#include <vector>

// Reference values, rows indexed by n, columns by g = 1, 2, ...; nullopt marks
// cells outside the domain (2g-2+n <= 0).
namespace golden {

using Row = std::vector<std::optional<long>>;

inline const std::vector<Row> kEuler = {
    {std::nullopt, 1L, 1L, 2L, 1L, 2L, 1L, 1L, -21L},
    {1L, 1L, 1L, 2L, 0L, 3L, 3L, 31L, 154L},
    {1L, 1L, 2L, 3L, -2L, 1L, -28L, -153L, -1486L},
    {2L, 1L, 6L, 6L, 0L, 36L, 152L, 1423L, 12072L},
    {4L, 0L, 18L, 4L, -24L, -86L, -1062L, -9474L, -103392L},
    {8L, -4L, 61L, -3L, 64L, 675L, 6421L, 72249L, 845821L},
    {16L, -19L, 202L, -158L, -69L, -3453L, -38028L, -506827L, -6971380L},
    {32L, -69L, 701L, -831L, 2905L, 11182L, 253892L, 3616144L, 56742775L},
    {64L, -230L, 2438L, -5135L, 9917L, -124467L, -1306559L, -25952916L, -459328520L},
    {128L, -734L, 8721L, -25446L, 112518L, 47564L, 9957185L, 178180002L, 3726950202L},
    {256L, -2289L, 31602L, -134879L, 552339L, -4683027L, -42459898L, -1308692710L, -29852809180L},
    {512L, -7039L, 116821L, -670008L, 4149475L, -9296152L, 399601667L, 8669878028L, 242171554559L},
    {1024L, -21460L, 437758L, -3414254L, 22844193L, -188955568L, -1233422911L, -65810827609L, -1924630979085L},
    {2048L, -65064L, 1663481L, -17022549L, 149941792L, -725537667L, 16798999974L, 416483532392L, 15652884150733L},
    {4096L, -196559L, 6388202L, -85672220L, 864112247L, -8133442381L, -25768675818L, -3327304711052L, -123449090799389L},
    {8192L, -592409L, 24759741L, -427885725L, 5376583485L, -41758325066L, 753773677302L, 19660027898985L, 1009591434254489L},
    {16384L, -1782690L, 96647478L, -2144390153L, 31618003029L, -367416474589L, 247507159657L, -170405333570573L, -7887831186821342L},
};

inline const std::vector<Row> kEulerOdd = {
    {std::nullopt, 0L, 0L, -1L, 0L, -1L, -2L, -8L, -38L},
    {0L, 0L, -1L, -1L, -1L, 1L, 3L, 34L, 278L},
    {-1L, 0L, -3L, -3L, -5L, -7L, -45L, -273L, -2143L},
    {-2L, 0L, -8L, -7L, -9L, 20L, 172L, 1688L, 16279L},
    {-4L, -1L, -24L, -27L, -66L, -184L, -1365L, -12037L, -127665L},
    {-8L, -5L, -71L, -81L, -137L, 340L, 6153L, 80002L, 995425L},
    {-16L, -20L, -228L, -364L, -1185L, -5356L, -47862L, -568014L, -7861828L},
    {-32L, -70L, -743L, -1394L, -3536L, 3081L, 210751L, 3814347L, 61973273L},
    {-64L, -231L, -2544L, -6716L, -28509L, -166300L, -1760727L, -27489461L, -492911760L},
    {-128L, -735L, -8891L, -29974L, -118323L, -144896L, 6985727L, 182953976L, 3900012883L},
    {-256L, -2290L, -32028L, -148035L, -837525L, -5638835L, -67361954L, -1348453174L, -31209047062L},
    {-512L, -7040L, -117503L, -708621L, -4206038L, -13846788L, 214832720L, 8779760089L, 246950368646L},
    {-1024L, -21461L, -439464L, -3528385L, -27300597L, -211328036L, -2704794269L, -66861595436L, -1987593802313L},
    {-2048L, -65065L, -1666211L, -17361527L, -150529289L, -834038152L, 5420792406L, 418887979427L, 15685889711601L},
    {-4096L, -196560L, -6395028L, -86682326L, -934471725L, -8667253394L, -115615170716L, -3355504362873L, -127079507192857L},
    {-8192L, -592410L, -24770663L, -430902388L, -5383163340L, -44375995137L, 48464678629L, 19709309010324L, 997347475403633L},
    {-16384L, -1782691L, -96674784L, -2153412834L, -32735332605L, -380341928592L, -5327400148291L, -171167953029982L, -8150861890475894L},
};

inline const std::vector<Row> kInvariant = {
    {std::nullopt, 1L, 1L, 2L, 1L, 2L, 1L, 1L, -21L, -124L, -1202L, -10738L, -112901L, -1271148L, -15668391L, -208214777L},
    {1L, 1L, 1L, 2L, 0L, 3L, 3L, 31L, 154L, 1405L, 12409L, 128198L, 1428208L, 17431842L, 229796854L, 3260731764L},
    {1L, 1L, 2L, 2L, 0L, 1L, -8L, -71L, -645L, -5916L, -60661L, -680524L, -8319674L, -110000218L, -1564363190L, -23810497027L},
    {1L, 1L, 2L, 2L, 1L, 4L, 22L, 148L, 1432L, 14933L, 173615L, 2170285L, 29302324L, 423870178L, 6547649971L, 107566687178L},
    {1L, 1L, 2L, 1L, 2L, 2L, -6L, -158L, -1911L, -24310L, -324161L, -4610023L, -69547908L, -1112576568L, -18825687993L, -336214369334L},
    {1L, 1L, 2L, 1L, 2L, 4L, 14L, 114L, 1677L, 26129L, 415109L, 6837661L, 117254253L, 2100407688L, 39335548893L, 770173833141L},
    {1L, 1L, 2L, 1L, 2L, 3L, 9L, -34L, -900L, -18622L, -368380L, -7231581L, -143971474L, -2934457032L, -61596805980L, -1335762223221L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 8L, 296L, 8548L, 223615L, 5456280L, 129717602L, 3072060291L, 73437715819L, 1786143030025L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, -20L, -2292L, -88814L, -2878337L, -85129652L, -2410044793L, -66988401529L, -1856600124025L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, 268L, 20992L, 1010696L, 39693125L, 1399384996L, 46526543233L, 1500185772169L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, -2154L, -212879L, -12481703L, -584609581L, -24221345542L, -934645878596L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, 20256L, 2377198L, 166410659L, 9165254242L, 440926365563L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, -102L, -207026L, -28931603L, -2383055405L, -152471494842L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, -102L, 295L, 2319534L, 381124388L, 36485839046L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, -102L, 295L, -602L, -28285686L, -5402710802L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, -102L, 295L, -602L, 1730L, 373201519L},
    {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, -102L, 295L, -602L, 1730L, -3616L},
};

inline const std::vector<Row> kInvariantOdd = {
    {std::nullopt, 0L, 0L, -1L, 0L, -1L, -2L, -8L, -38L, -275L, -2225L, -20358L, -207321L, -2320136L, -28287416L, -373205135L},
    {0L, 0L, -1L, -1L, -1L, 1L, 3L, 34L, 278L, 2285L, 20921L, 212777L, 2376903L, 28931001L, 381122658L, 5402707186L},
    {0L, 1L, -1L, -1L, -2L, -1L, -17L, -114L, -918L, -8555L, -88885L, -1010798L, -12481998L, -166411261L, -2383057135L, -36485842662L},
    {0L, 1L, -2L, -1L, -2L, 2L, 11L, 158L, 1659L, 18615L, 223544L, 2878235L, 39692830L, 584608979L, 9165252512L, 152471491226L},
    {0L, 1L, -2L, 1L, -1L, 0L, -19L, -148L, -1929L, -26136L, -368451L, -5456382L, -85129947L, -1399385598L, -24221347272L, -440926369179L},
    {0L, 1L, -2L, 1L, -2L, 1L, -8L, 71L, 1414L, 24303L, 415038L, 7231479L, 129717307L, 2410044191L, 46526541503L, 934645874980L},
    {0L, 1L, -2L, 1L, -2L, 3L, -10L, -31L, -663L, -14940L, -324232L, -6837763L, -143971769L, -3072060893L, -66988403259L, -1500185775785L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, -1L, 136L, 5909L, 173544L, 4609921L, 117253958L, 2934456430L, 73437714089L, 1856600120409L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -39L, -1412L, -60732L, -2170387L, -69548203L, -2100408290L, -61596807710L, -1786143033641L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, 117L, 12338L, 680422L, 29302029L, 1112575966L, 39335547163L, 1335762219605L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -1273L, -128300L, -8319969L, -423870780L, -18825689723L, -770173836757L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, 10636L, 1427913L, 109999616L, 6547648241L, 336214365718L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, -102L, -113196L, -17432444L, -1564364920L, -107566690794L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, -102L, -295L, 1270546L, 229795124L, 23810493411L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, -102L, -295L, -602L, -15670121L, -3260735380L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, -102L, -295L, -602L, -1730L, 208211161L},
    {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, -102L, -295L, -602L, -1730L, -3616L},
};

// Limits of the invariant values as n grows, g = 1, 2, ...
inline const std::vector<long> kStable = {1L, 1L, 2L, 1L, 2L, 3L, 11L, 0L, 18L, -7L, 71L, -102L, 295L};
inline const std::vector<long> kStableOdd = {0L, 1L, -2L, 1L, -2L, 3L, -11L, 0L, -18L, -7L, -71L, -102L, -295L};

struct SchurTerm {
  std::vector<int> parts;
  long coeff;
};

struct EquivariantEntry {
  int g;
  int n;
  std::vector<SchurTerm> terms;  // empty means zero
};

inline const std::vector<EquivariantEntry> kEquivariant = {
    {0, 3, {{{3}, 1}}},
    {0, 4, {{{4}, 1}}},
    {0, 5, {{{5}, 1}}},
    {1, 1, {{{1}, 1}}},
    {1, 2, {{{2}, 1}}},
    {1, 3, {{{1,1,1}, 1}, {{3}, 1}}},
    {1, 4, {{{2,1,1}, 1}, {{4}, 1}}},
    {1, 5, {{{1,1,1,1,1}, 1}, {{3,1,1}, 1}, {{5}, 1}}},
    {2, 0, {{{}, 1}}},
    {2, 1, {{{1}, 1}}},
    {2, 2, {{{2}, 1}}},
    {2, 3, {{{3}, 1}}},
    {2, 4, {{{2,1,1}, -1}, {{2,2}, 1}, {{4}, 1}}},
    {2, 5, {{{2,1,1,1}, -1}, {{3,1,1}, -1}, {{3,2}, 1}, {{5}, 1}}},
    {3, 0, {{{}, 1}}},
    {3, 1, {{{1}, 1}}},
    {3, 2, {{{2}, 2}}},
    {3, 3, {{{2,1}, 2}, {{3}, 2}}},
    {3, 4, {{{2,1,1}, 1}, {{2,2}, 2}, {{3,1}, 3}, {{4}, 2}}},
    {3, 5, {{{2,1,1,1}, 1}, {{2,2,1}, 2}, {{3,1,1}, 3}, {{3,2}, 3}, {{4,1}, 3}, {{5}, 2}}},
    {4, 0, {{{}, 2}}},
    {4, 1, {{{1}, 2}}},
    {4, 2, {{{1,1}, 1}, {{2}, 2}}},
    {4, 3, {{{1,1,1}, 2}, {{2,1}, 1}, {{3}, 2}}},
    {4, 4, {{{1,1,1,1}, 1}, {{2,2}, 1}, {{4}, 1}}},
    {4, 5, {{{1,1,1,1,1}, 2}, {{2,1,1,1}, 1}, {{3,1,1}, -1}, {{4,1}, -1}, {{5}, 1}}},
    {5, 0, {{{}, 1}}},
    {5, 1, {}},
    {5, 2, {{{1,1}, -2}}},
    {5, 3, {{{1,1,1}, -1}, {{3}, 1}}},
    {5, 4, {{{1,1,1,1}, -5}, {{2,1,1}, -4}, {{2,2}, -3}, {{3,1}, -1}, {{4}, 2}}},
    {5, 5, {{{2,1,1,1}, 4}, {{2,2,1}, 1}, {{3,1,1}, 4}, {{3,2}, 1}, {{4,1}, 3}, {{5}, 2}}},
    {6, 0, {{{}, 2}}},
    {6, 1, {{{1}, 3}}},
    {6, 2, {{{2}, 1}}},
    {6, 3, {{{1,1,1}, 10}, {{2,1}, 11}, {{3}, 4}}},
    {6, 4, {{{1,1,1,1}, -5}, {{2,1,1}, -15}, {{2,2}, -4}, {{3,1}, -10}, {{4}, 2}}},
    {6, 5, {{{1,1,1,1,1}, 34}, {{2,1,1,1}, 51}, {{2,2,1}, 41}, {{3,1,1}, 22}, {{3,2}, 16}, {{4,1}, 4}, {{5}, 4}}},
};

inline const std::vector<EquivariantEntry> kEquivariantOdd = {
    {0, 3, {{{3}, 1}}},
    {0, 4, {{{4}, 1}}},
    {0, 5, {{{5}, 1}}},
    {1, 1, {}},
    {1, 2, {{{1,1}, -1}}},
    {1, 3, {{{2,1}, -1}}},
    {1, 4, {{{1,1,1,1}, -1}, {{3,1}, -1}}},
    {1, 5, {{{2,1,1,1}, -1}, {{4,1}, -1}}},
    {2, 0, {}},
    {2, 1, {}},
    {2, 2, {{{1,1}, -1}, {{2}, 1}}},
    {2, 3, {{{1,1,1}, -1}, {{3}, 1}}},
    {2, 4, {{{1,1,1,1}, -1}, {{2,1,1}, -1}, {{2,2}, 1}, {{4}, 1}}},
    {2, 5, {{{1,1,1,1,1}, -1}, {{2,1,1,1}, -1}, {{3,1,1}, -1}, {{3,2}, 1}, {{5}, 1}}},
    {3, 0, {}},
    {3, 1, {{{1}, -1}}},
    {3, 2, {{{1,1}, -2}, {{2}, -1}}},
    {3, 3, {{{1,1,1}, -2}, {{2,1}, -2}, {{3}, -2}}},
    {3, 4, {{{1,1,1,1}, -2}, {{2,1,1}, -3}, {{2,2}, -1}, {{3,1}, -3}, {{4}, -2}}},
    {3, 5, {{{1,1,1,1,1}, -2}, {{2,1,1,1}, -3}, {{2,2,1}, -2}, {{3,1,1}, -3}, {{3,2}, -3}, {{4,1}, -3}, {{5}, -2}}},
    {4, 0, {{{}, -1}}},
    {4, 1, {{{1}, -1}}},
    {4, 2, {{{1,1}, -2}, {{2}, -1}}},
    {4, 3, {{{1,1,1}, -2}, {{2,1}, -2}, {{3}, -1}}},
    {4, 4, {{{1,1,1,1}, -3}, {{2,1,1}, -4}, {{2,2}, -2}, {{3,1}, -3}, {{4}, 1}}},
    {4, 5, {{{1,1,1,1,1}, -3}, {{2,1,1,1}, -4}, {{2,2,1}, -4}, {{3,1,1}, -4}, {{3,2}, -3}, {{4,1}, -1}, {{5}, 1}}},
    {5, 0, {}},
    {5, 1, {{{1}, -1}}},
    {5, 2, {{{1,1}, -3}, {{2}, -2}}},
    {5, 3, {{{1,1,1}, -1}, {{2,1}, -3}, {{3}, -2}}},
    {5, 4, {{{1,1,1,1}, -7}, {{2,1,1}, -9}, {{2,2}, -5}, {{3,1}, -7}, {{4}, -1}}},
    {5, 5, {{{1,1,1,1,1}, -2}, {{2,1,1,1}, -6}, {{2,2,1}, -5}, {{3,1,1}, -8}, {{3,2}, -4}, {{4,1}, -4}, {{5}, -2}}},
    {6, 0, {{{}, -1}}},
    {6, 1, {{{1}, 1}}},
    {6, 2, {{{1,1}, -6}, {{2}, -1}}},
    {6, 3, {{{1,1,1}, 4}, {{2,1}, 7}, {{3}, 2}}},
    {6, 4, {{{1,1,1,1}, -22}, {{2,1,1}, -32}, {{2,2}, -12}, {{3,1}, -14}}},
    {6, 5, {{{1,1,1,1,1}, 19}, {{2,1,1,1}, 27}, {{2,2,1}, 26}, {{3,1,1}, 6}, {{3,2}, 10}, {{4,1}, -1}, {{5}, 1}}},
};

}  // namespace golden
