// Generated by tools/gen_filters.py. Do not edit by hand.
//
// Decomposition low-pass taps in toolbox ordering, rounded from 60-digit
// solutions to the nearest f64.

#![allow(clippy::approx_constant, clippy::excessive_precision, clippy::unreadable_literal)]

pub(crate) const DB1: [f64; 2] = [
    0.7071067811865476,
    0.7071067811865476,
];
pub(crate) const DB2: [f64; 4] = [
    -0.12940952255126037,
    0.2241438680420134,
    0.8365163037378079,
    0.48296291314453416,
];
pub(crate) const DB3: [f64; 6] = [
    0.03522629188570953,
    -0.08544127388202666,
    -0.13501102001025458,
    0.45987750211849154,
    0.8068915093110925,
    0.33267055295008263,
];
pub(crate) const DB4: [f64; 8] = [
    -0.010597401785069032,
    0.0328830116668852,
    0.030841381835560764,
    -0.18703481171909309,
    -0.027983769416859854,
    0.6308807679298589,
    0.7148465705529157,
    0.2303778133088965,
];
pub(crate) const DB5: [f64; 10] = [
    0.0033357252854737712,
    -0.012580751999081999,
    -0.006241490212798274,
    0.07757149384004572,
    -0.032244869584638375,
    -0.24229488706638203,
    0.13842814590132074,
    0.7243085284377729,
    0.6038292697971896,
    0.16010239797419293,
];
pub(crate) const DB6: [f64; 12] = [
    -0.0010773010853084796,
    0.004777257510945511,
    0.0005538422011614961,
    -0.03158203931748603,
    0.027522865530305727,
    0.09750160558732304,
    -0.12976686756726194,
    -0.22626469396543983,
    0.31525035170919763,
    0.7511339080210954,
    0.49462389039845306,
    0.11154074335010947,
];
pub(crate) const DB7: [f64; 14] = [
    0.00035371379997452024,
    -0.0018016407040474908,
    0.0004295779729213665,
    0.01255099855609984,
    -0.01657454163066688,
    -0.03802993693501441,
    0.08061260915108308,
    0.07130921926683026,
    -0.22403618499387498,
    -0.14390600392856498,
    0.4697822874051931,
    0.7291320908462351,
    0.3965393194819173,
    0.07785205408500918,
];
pub(crate) const DB8: [f64; 16] = [
    -0.00011747678412476953,
    0.0006754494064505693,
    -0.00039174037337694705,
    -0.004870352993451574,
    0.008746094047405777,
    0.013981027917398282,
    -0.044088253930794755,
    -0.017369301001807547,
    0.12874742662047847,
    0.0004724845739132828,
    -0.2840155429615469,
    -0.015829105256349306,
    0.5853546836542067,
    0.6756307362972898,
    0.31287159091429995,
    0.05441584224310401,
];
pub(crate) const DB9: [f64; 18] = [
    3.93473203162716e-05,
    -0.0002519631889427101,
    0.00023038576352319597,
    0.0018476468830562265,
    -0.00428150368246343,
    -0.004723204757751397,
    0.022361662123679096,
    0.00025094711483145197,
    -0.06763282906132997,
    0.03072568147933338,
    0.14854074933810638,
    -0.09684078322297646,
    -0.2932737832791749,
    0.13319738582500756,
    0.6572880780513005,
    0.6048231236901112,
    0.24383467461259034,
    0.038077947363878345,
];
pub(crate) const DB10: [f64; 20] = [
    -1.3264202894521244e-05,
    9.358867032006959e-05,
    -0.00011646685512928545,
    -0.0006858566949597116,
    0.001992405295185056,
    0.001395351747052901,
    -0.010733175483330575,
    0.0036065535669561697,
    0.033212674059341,
    -0.029457536821875813,
    -0.07139414716639708,
    0.09305736460357235,
    0.12736934033579325,
    -0.19594627437737705,
    -0.24984642432731538,
    0.2811723436605775,
    0.6884590394536035,
    0.5272011889317256,
    0.1881768000776915,
    0.026670057900555554,
];
pub(crate) const SYM2: [f64; 4] = [
    -0.12940952255126037,
    0.2241438680420134,
    0.8365163037378079,
    0.48296291314453416,
];
pub(crate) const SYM3: [f64; 6] = [
    0.03522629188570953,
    -0.08544127388202666,
    -0.13501102001025458,
    0.45987750211849154,
    0.8068915093110925,
    0.33267055295008263,
];
pub(crate) const SYM4: [f64; 8] = [
    -0.07576571478950221,
    -0.029635527646002493,
    0.497618667632775,
    0.8037387518051321,
    0.29785779560530606,
    -0.09921954357663353,
    -0.012603967262031304,
    0.032223100604051466,
];
pub(crate) const SYM5: [f64; 10] = [
    0.027333068344998768,
    0.02951949092570626,
    -0.039134249302313844,
    0.19939753397685558,
    0.7234076904040407,
    0.633978963456792,
    0.01660210576451085,
    -0.17532808990805623,
    -0.021101834024689042,
    0.019538882735249827,
];
pub(crate) const SYM6: [f64; 12] = [
    0.015404109327044824,
    0.0034907120842221626,
    -0.11799011114852002,
    -0.04831174258569806,
    0.49105594192797375,
    0.787641141028651,
    0.3379294217281658,
    -0.07263752278637658,
    -0.02106029251237085,
    0.04472490177078139,
    0.0017677118642540077,
    -0.00780070832503238,
];
pub(crate) const SYM7: [f64; 14] = [
    0.002681814568260147,
    -0.001047384888679738,
    -0.012636303403240567,
    0.030515513165877885,
    0.06789269350122057,
    -0.04955283493704283,
    0.017441255086835708,
    0.5361019170905692,
    0.7677643170048829,
    0.2886296317506479,
    -0.14004724044293365,
    -0.10780823770328972,
    0.0040102448715223955,
    0.010268176708464817,
];
pub(crate) const SYM8: [f64; 16] = [
    -0.0033824159510050028,
    -0.0005421323318000107,
    0.03169508781152599,
    0.007607487324976609,
    -0.14329423835127267,
    -0.061273359067811076,
    0.4813596512590534,
    0.777185751699628,
    0.36444189483617895,
    -0.0519458381078818,
    -0.027219029917103486,
    0.04913717967373029,
    0.0038087520138944896,
    -0.014952258337062199,
    -0.0003029205147241331,
    0.001889950332767689,
];
pub(crate) const SYM9: [f64; 18] = [
    0.0014009155259146562,
    0.0006197808889855071,
    -0.013271967781817134,
    -0.011528210207679187,
    0.030224878858275187,
    0.0005834627461249819,
    -0.05456895843083335,
    0.23876091460730517,
    0.7178970827644124,
    0.6173384491409342,
    0.03527248803527104,
    -0.19155083129728434,
    -0.018233770779395506,
    0.062077789302885746,
    0.008859267493400267,
    -0.010264064027633121,
    -0.00047315449868004354,
    0.001069490032908612,
];
pub(crate) const SYM10: [f64; 20] = [
    0.0007701598091144599,
    9.563267072285273e-05,
    -0.00864129927702215,
    -0.0014653825813046104,
    0.04592723923109151,
    0.011609893903711319,
    -0.1594942788849106,
    -0.07088053578323157,
    0.4716906669384429,
    0.7695100370210979,
    0.3838267610670763,
    -0.035536740473819585,
    -0.03199005688242811,
    0.049994972077375154,
    0.00576491203358115,
    -0.02035493981231111,
    -0.0008043589320164513,
    0.004593173585311792,
    5.703608361849501e-05,
    -0.00045932942100465206,
];
pub(crate) const SYM11: [f64; 22] = [
    0.0001717219506993481,
    -3.8795655736148036e-05,
    -0.0017343662672978377,
    0.0005883527353969825,
    0.00651249567477152,
    -0.009857934828789213,
    -0.02408084159586358,
    0.037037415978858186,
    0.06997679961073293,
    -0.02283265102256226,
    0.09719839445890552,
    0.5720229780100758,
    0.7303435490883896,
    0.23768990904925752,
    -0.2046547944957883,
    -0.1446023437053119,
    0.03526675956446462,
    0.04300019068155133,
    -0.0020034719001089793,
    -0.006389603666454665,
    0.0001105350976426903,
    0.000489263610261903,
];
pub(crate) const SYM12: [f64; 24] = [
    0.00011196719424656528,
    -1.1353928041526612e-05,
    -0.001349755755571579,
    0.00018021409008521752,
    0.007414965517654315,
    -0.001408909244329129,
    -0.024220722675013403,
    0.007553780611679315,
    0.0491793182996612,
    -0.035848830736954634,
    -0.022162306170351302,
    0.398885972390192,
    0.7634790977836405,
    0.46274103121928645,
    -0.07833262231631544,
    -0.17037069723884962,
    0.015301740622480154,
    0.05780417944550475,
    -0.002604391031331419,
    -0.014589836449233534,
    0.00030764779631052455,
    0.0023502976141833473,
    -1.8158078862632958e-05,
    -0.00017906658697508447,
];
pub(crate) const SYM13: [f64; 26] = [
    6.820325263074355e-05,
    -3.573862364871594e-05,
    -0.001136063438927969,
    -0.00017094285852957213,
    0.00752622538996817,
    0.005296359738721862,
    -0.020216768133395468,
    -0.017211642726304387,
    0.01386249743583841,
    -0.059750627717956466,
    -0.12436246075150338,
    0.19770481877126597,
    0.6957391505615691,
    0.6445643839011571,
    0.11023022302128688,
    -0.14049009311367552,
    0.008819757670429852,
    0.09292603089914397,
    0.017618296880645045,
    -0.020749686325520652,
    -0.0014924472742587286,
    0.005674853760123338,
    0.0004132611988416782,
    -0.0007213643851363755,
    3.690537342323894e-05,
    7.042986690696273e-05,
];
pub(crate) const SYM14: [f64; 28] = [
    -2.5879090265402585e-05,
    1.1210865808903235e-05,
    0.00039843567297607205,
    -6.286542481474576e-05,
    -0.0025794417259337628,
    0.0003664765736599812,
    0.010037693717674817,
    -0.002753774791224789,
    -0.029196217764050975,
    0.0042805204990007525,
    0.03743308836282358,
    -0.05763449835141097,
    -0.03531811211510752,
    0.39320152196203945,
    0.7599762419611892,
    0.47533576263434446,
    -0.05811182331765858,
    -0.1599974111465199,
    0.025898587531053823,
    0.0698276163618212,
    -0.002365048836736659,
    -0.019439314263628174,
    0.0010131419871843175,
    0.004532677471946337,
    -7.321421356689134e-05,
    -0.0006057601824664403,
    1.9329016965548985e-05,
    4.461897799148456e-05,
];
pub(crate) const SYM15: [f64; 30] = [
    9.712419737964491e-06,
    -7.359666798928679e-06,
    -0.00016066186637499557,
    5.5122547855653366e-05,
    0.0010705672194627174,
    -0.00026731644647202594,
    -0.0035901654473736223,
    0.0034234507363524206,
    0.010079977087906634,
    -0.019405011430946084,
    -0.03887671687685497,
    0.021937642719737218,
    0.040735479696770494,
    -0.041082666635469264,
    0.11153369514258364,
    0.5786404152151502,
    0.7218430296363336,
    0.24396270543218165,
    -0.19662635876631657,
    -0.13405629845628275,
    0.06839331006051017,
    0.06796982904489572,
    -0.008744788886485916,
    -0.01717125278164452,
    0.001526138278183266,
    0.0034810287370659995,
    -0.00010815440168565741,
    -0.0004021685376030732,
    2.1717890150808833e-05,
    2.866070852533231e-05,
];
pub(crate) const SYM16: [f64; 32] = [
    6.230006701237647e-06,
    -3.1135564076138703e-06,
    -0.00010943147929558312,
    2.8078582128206924e-05,
    0.0008523547108065521,
    -0.00010844562230766216,
    -0.0038809122526122205,
    0.0007182119788254316,
    0.012666731659876957,
    -0.0031265171722736304,
    -0.03105120284364275,
    0.004869274404814542,
    0.03233309161058235,
    -0.0669830490706191,
    -0.03457422841769919,
    0.39712293362039824,
    0.7565249878763846,
    0.47534280601234713,
    -0.05404060138744081,
    -0.1595921921853958,
    0.03072113906329964,
    0.07803785290354831,
    -0.0035102750683370914,
    -0.024952758046315127,
    0.0013598447424801486,
    0.006937761130811371,
    -0.0002221164762103135,
    -0.001338720606693644,
    3.656592483330303e-05,
    0.00016545679579123957,
    -5.396483179313488e-06,
    -1.0797982104330864e-05,
];
pub(crate) const SYM17: [f64; 34] = [
    4.297343327338256e-06,
    2.780126693825943e-06,
    -6.293702597545909e-05,
    -1.3506383399799107e-05,
    0.00047599638026318304,
    -0.00013864230268101327,
    -0.0027416759756781813,
    0.0008567700701928022,
    0.010482366933016147,
    -0.004819212803181354,
    -0.03329138349230622,
    0.01790395221438949,
    0.10475461484219489,
    0.01727117821060019,
    -0.11856693261099856,
    0.1423983504151139,
    0.6507166292043823,
    0.681488995344317,
    0.18053958458074407,
    -0.1550760053497069,
    -0.08607087472063264,
    0.01615880872591857,
    -0.007261634750933915,
    -0.01803889724190139,
    0.009952982523507613,
    0.012396988366634302,
    -0.0019054076898564055,
    -0.003932325279794941,
    5.840042869518092e-05,
    0.0007198270642145453,
    2.5207933140671322e-05,
    -7.607124405602918e-05,
    -2.4527163425740825e-06,
    3.7912531943316247e-06,
];
pub(crate) const SYM18: [f64; 36] = [
    2.6126125564557025e-06,
    1.3549157617851244e-06,
    -4.524675787451531e-05,
    -1.4020992577002794e-05,
    0.00039616840637938817,
    7.021273458599636e-05,
    -0.0023138718144868685,
    -0.0004115211092058262,
    0.009502164390909605,
    0.0016429863972087337,
    -0.03032509108914365,
    -0.00507708516041699,
    0.08421992997007587,
    0.03399566710354207,
    -0.15993814866769704,
    -0.05202915898042007,
    0.47396905989574695,
    0.7536291400999388,
    0.40148386056768737,
    -0.03248057329150485,
    -0.07379920729088593,
    0.028529597038742298,
    0.00627794455413226,
    -0.03171268473169947,
    -0.0032607441999778558,
    0.01501235634421641,
    0.0010877847895682568,
    -0.005239789683013974,
    -0.0001887762394005706,
    0.0014280863270799422,
    4.741614518228368e-05,
    -0.000265830110241981,
    -9.858816030038168e-06,
    2.955743762087669e-05,
    7.847298055848573e-07,
    -1.5131530692320486e-06,
];
pub(crate) const SYM19: [f64; 38] = [
    5.487732768218514e-07,
    -6.463651303333404e-07,
    -1.1880518269831197e-05,
    8.873312173693282e-06,
    0.00011553923333583907,
    -4.612039600171763e-05,
    -0.0006357645150042333,
    0.00015915804767957373,
    0.0021214250281832055,
    -0.0011607032571970346,
    -0.005122205002569428,
    0.007968438320637783,
    0.015797439295764448,
    -0.022651993378066386,
    -0.04663598353477771,
    0.007015573857219181,
    0.008954591172977125,
    -0.067525058040684,
    0.10902582508022089,
    0.5781449453372968,
    0.7195555257159846,
    0.2582661692381038,
    -0.17659686625099993,
    -0.11624173010700133,
    0.09363084341592179,
    0.08407267627938503,
    -0.016908234861133548,
    -0.027709896931223672,
    0.004319351874887417,
    0.008262236955522643,
    -0.0006179223277899935,
    -0.0017049602611613154,
    0.00012930767650608303,
    0.00027621877685681965,
    -1.6821387029242595e-05,
    -2.8151138661488743e-05,
    2.062317063229324e-06,
    1.7509367995304997e-06,
];
pub(crate) const SYM20: [f64; 40] = [
    3.695537474791267e-07,
    -1.9015675892278172e-07,
    -7.91936141189395e-06,
    3.0256660631185363e-06,
    7.992967835712114e-05,
    -1.9284123010161865e-05,
    -0.0004947310915655073,
    7.215991190073666e-05,
    0.0020889947081866745,
    -0.00030526283188065685,
    -0.006606585799120731,
    0.0014230873596194143,
    0.0170040490232798,
    -0.003313857384407233,
    -0.03162943714548432,
    0.008123228356394549,
    0.025579349509566317,
    -0.0789943449267614,
    -0.02981936887124318,
    0.4058314443632748,
    0.7511627284288979,
    0.4719914750911054,
    -0.05108834293600639,
    -0.16057829842072482,
    0.03625095165576088,
    0.08891966802862601,
    -0.006843701966974055,
    -0.03537333675746389,
    0.0019385970676619735,
    0.012157040948987497,
    -0.0006111263859779794,
    -0.003471647802925689,
    0.00012544091727041256,
    0.0007476108598012617,
    -2.661555034277681e-05,
    -0.00011739133516628476,
    4.525422210086227e-06,
    1.2287252778374232e-05,
    -3.2567026426308275e-07,
    -6.329129045042896e-07,
];
pub(crate) const SYM21: [f64; 42] = [
    2.466246668775003e-07,
    7.895915219086422e-08,
    -5.098191394542815e-06,
    -1.8311683443166816e-06,
    4.694778085146906e-05,
    6.079130379279605e-06,
    -0.00028647517579224617,
    6.208657526518205e-05,
    0.0014213204488642591,
    -0.00043315590948489805,
    -0.00535395747982219,
    0.0017659617921750256,
    0.015400834640828304,
    -0.008992029245887679,
    -0.04716326398352631,
    0.010670135914387542,
    0.10148310770098129,
    0.007367389413048907,
    -0.12356548353702358,
    0.14412386118623935,
    0.6461859974343431,
    0.6815833206011678,
    0.19202706525467292,
    -0.1513107801274623,
    -0.08709884432318027,
    0.027917281511049174,
    0.006254640694272125,
    -0.015081470330631274,
    0.01118865626882641,
    0.014507869417730149,
    -0.004095432197350763,
    -0.006748982773712432,
    0.0006959156819539845,
    0.0020311844157799622,
    -2.0607453220690315e-05,
    -0.0004134956180601992,
    -1.055398996304094e-05,
    5.8207863076932046e-05,
    1.8389984524410992e-06,
    -5.161588363218357e-06,
    -7.401089206374045e-08,
    2.3116904239808353e-07,
];
pub(crate) const SYM22: [f64; 44] = [
    -7.64516248077801e-08,
    9.6695916326799e-08,
    1.8965297185275425e-06,
    -1.857526078465819e-06,
    -2.2044803724298264e-05,
    1.6896367052037374e-05,
    0.00016075998841882515,
    -9.701802968517006e-05,
    -0.0008383652082160423,
    0.000351335448807525,
    0.0032745466154833957,
    -0.0006277717458375735,
    -0.009279559170427821,
    0.0002663067075656686,
    0.018425911027186694,
    -0.0014184327816154905,
    -0.024853494385208227,
    0.018239299741644784,
    0.013671127424057647,
    -0.13804735974017546,
    -0.12468468245656406,
    0.32338766410300285,
    0.7370000873129339,
    0.5397400963715223,
    0.04446253275610485,
    -0.10109691945800357,
    0.0530061553426915,
    0.09062108784388698,
    -0.0067287433144362,
    -0.03532936594554509,
    0.0038782491274873122,
    0.01431480121330397,
    -0.0006972873855032876,
    -0.00411735603809705,
    0.0004247067171060425,
    0.0010968652074647813,
    -0.00011806018428513224,
    -0.00022329645549742886,
    2.5905545737431923e-05,
    3.4928825797468894e-05,
    -3.0140245591689476e-06,
    -3.4016116123809657e-06,
    2.3018417045460557e-07,
    1.8199273045627455e-07,
];
pub(crate) const SYM23: [f64; 46] = [
    2.3084751899525595e-08,
    -6.148235107524381e-08,
    -6.056452903494884e-07,
    1.405136103306541e-06,
    7.778898831167841e-06,
    -1.4543222792117125e-05,
    -6.318819457562671e-05,
    8.969337608951375e-05,
    0.00035164645538144956,
    -0.00037781324033497394,
    -0.0013910463407705688,
    0.001272740725516073,
    0.0041464130023714085,
    -0.003918544529735192,
    -0.01052207098407135,
    0.009477193368083075,
    0.022791366855310524,
    -0.012388073445102444,
    -0.021690199677618004,
    0.03036097487728445,
    -0.03451756148748315,
    -0.22215504714080003,
    -0.11144849818698649,
    0.41795858152083126,
    0.7387661502992316,
    0.4403589469949972,
    0.014686248580208845,
    -0.02779177090631794,
    0.10638947416030435,
    0.08528460796800102,
    -0.01038510253851874,
    -0.019868253828200438,
    0.011612317218413843,
    0.010919768079934082,
    -0.002414422930633669,
    -0.0027763021491161266,
    0.0009310684430261898,
    0.0007938977246477141,
    -0.00017638841806714322,
    -0.00014123184272391262,
    3.705832786538274e-05,
    2.2492764858291452e-05,
    -4.071925202916556e-06,
    -2.0268177606207365e-06,
    3.921900688132934e-07,
    1.4725543635982118e-07,
];
pub(crate) const SYM24: [f64; 48] = [
    1.8457193629477696e-08,
    -2.4386414401916634e-08,
    -4.950935037201874e-07,
    5.270161140465739e-07,
    6.294886817410051e-06,
    -5.3431113130107315e-06,
    -5.03897920475141e-05,
    3.4407888873473006e-05,
    0.0002879735305026735,
    -0.00015293852444121174,
    -0.0012574093563958678,
    0.0004329642218172603,
    0.004231325984499124,
    -0.0005858948588265141,
    -0.01055888208350466,
    0.0001977391015426045,
    0.019109465864127324,
    -0.00205622927078439,
    -0.023469395855084438,
    0.022109595716144848,
    0.011882727471495552,
    -0.1465696875237236,
    -0.13224373038156984,
    0.31751302329995473,
    0.732850294724658,
    0.5437055082756633,
    0.053767887504400536,
    -0.09559894159481794,
    0.05604475978949155,
    0.09385164128601088,
    -0.007517274066266367,
    -0.03841957147412975,
    0.004586217499762654,
    0.01678029674082614,
    -0.0009278700435977158,
    -0.0053874780577338474,
    0.0005036849470443906,
    0.0015722804359780862,
    -0.0001774608425432015,
    -0.0003782605070606553,
    4.631386732404787e-05,
    7.245124473919668e-05,
    -8.127241624129774e-06,
    -1.0163937604988716e-05,
    9.109278212058168e-07,
    9.242485529947203e-07,
    -5.951245307970653e-08,
    -4.504281981573392e-08,
];
pub(crate) const SYM25: [f64; 50] = [
    1.3554942757809275e-08,
    -3.389034639362663e-09,
    -3.6675785053168366e-07,
    -1.5791275364206387e-08,
    4.430141305158784e-06,
    7.215948043176634e-07,
    -3.217411149508858e-05,
    -1.9701653906678315e-06,
    0.00017018916092075253,
    -3.224409757419323e-05,
    -0.0007620562910058761,
    0.00023601043971611583,
    0.0028253389074504188,
    -0.0008023036068150043,
    -0.008021905103193656,
    0.0036495932092552425,
    0.021566716882988033,
    -0.011381846727610903,
    -0.05926815961245894,
    0.0005323165478116823,
    0.0892305997970736,
    -0.01675309208636364,
    -0.15133869536099723,
    0.1206896006219468,
    0.6312939064669539,
    0.6912497192995598,
    0.22548913907132964,
    -0.1220142460840342,
    -0.07055449114478732,
    0.04469951772315727,
    0.019906834367423125,
    -0.012463743988650923,
    0.01058949821703092,
    0.015484475175236776,
    -0.005459198473154159,
    -0.008721595190377181,
    0.0016979257062918255,
    0.0035733352495088246,
    -0.0002499821054655281,
    -0.00103359573246837,
    1.6868729158436702e-05,
    0.00022984465828236708,
    2.8254854424396645e-06,
    -3.7946552537481886e-05,
    -5.091913552177284e-07,
    4.594877948328036e-06,
    2.9096222711960364e-08,
    -3.5981233195390826e-07,
    3.753777271066635e-09,
    1.5013784587472554e-08,
];
pub(crate) const COIF1: [f64; 6] = [
    -0.015655728135791993,
    -0.07273261951252645,
    0.3848648468648577,
    0.8525720202116004,
    0.33789766245748176,
    -0.07273261951252645,
];
pub(crate) const COIF2: [f64; 12] = [
    -0.000720549445520347,
    -0.001823208870911032,
    0.005611434819368834,
    0.02368017194684777,
    -0.059434418646431085,
    -0.07648859907828076,
    0.41700518442323903,
    0.8127236354494135,
    0.38611006682276283,
    -0.0673725547237256,
    -0.04146493678687178,
    0.01638733646320364,
];
pub(crate) const COIF3: [f64; 18] = [
    -3.4599773197272774e-05,
    -7.0983302506379e-05,
    0.0004662169598204029,
    0.0011175187708306303,
    -0.002574517688136797,
    -0.009007976136730624,
    0.015880544863669452,
    0.03455502757329773,
    -0.08230192710629981,
    -0.07179982161915484,
    0.42848347637737,
    0.7937772226260872,
    0.4051769024091182,
    -0.06112339000297254,
    -0.06577191128146936,
    0.023452696142077165,
    0.0077825964256727454,
    -0.0037935128643808015,
];
pub(crate) const COIF4: [f64; 24] = [
    -1.7849909144933466e-06,
    -3.2596479400307506e-06,
    3.1229861599195265e-05,
    6.233885431278718e-05,
    -0.0002599743371222568,
    -0.0005890202246332164,
    0.0012665610789256603,
    0.003751434697146086,
    -0.0056582838001308835,
    -0.015211728187697211,
    0.025082253337949608,
    0.03933442260558915,
    -0.09622042453595264,
    -0.06662747236681715,
    0.43438603311435653,
    0.7822389344242826,
    0.41530842700068227,
    -0.05607731960356926,
    -0.08126671024919373,
    0.026682304669604834,
    0.016068947131575025,
    -0.00734616793626805,
    -0.0016294924252267858,
    0.000892313902537003,
];
pub(crate) const COIF5: [f64; 30] = [
    -9.604010112767892e-08,
    -1.6237995172048335e-07,
    2.0612203985788783e-06,
    3.7007277113394796e-06,
    -2.1270221672515614e-05,
    -4.12198619242655e-05,
    0.00014035632812373243,
    0.00030185794166824473,
    -0.0006375589261258812,
    -0.0016616273039298788,
    0.0024315754425382886,
    0.006761520220620417,
    -0.009159507338676163,
    -0.019758391600965465,
    0.03267479946705735,
    0.041287530472117834,
    -0.10556315130733723,
    -0.06203775157498195,
    0.4379823066591633,
    0.7742936228603274,
    0.42157126673075435,
    -0.05204667025355476,
    -0.09192158806008609,
    0.028169744270532353,
    0.023408322118927783,
    -0.010131584846900275,
    -0.004159312627578639,
    0.0021782943778456947,
    0.0003585777411617577,
    -0.000212081862067494,
];
pub(crate) const BIOR11_DEC: [f64; 2] = [
    0.7071067811865476,
    0.7071067811865476,
];
pub(crate) const BIOR11_REC: [f64; 2] = [
    0.7071067811865476,
    0.7071067811865476,
];
pub(crate) const BIOR22_DEC: [f64; 5] = [
    -0.1767766952966369,
    0.3535533905932738,
    1.0606601717798212,
    0.3535533905932738,
    -0.1767766952966369,
];
pub(crate) const BIOR22_REC: [f64; 3] = [
    0.3535533905932738,
    0.7071067811865476,
    0.3535533905932738,
];
pub(crate) const BIOR24_DEC: [f64; 9] = [
    0.03314563036811941,
    -0.06629126073623882,
    -0.1767766952966369,
    0.4198446513295126,
    0.9943689110435825,
    0.4198446513295126,
    -0.1767766952966369,
    -0.06629126073623882,
    0.03314563036811941,
];
pub(crate) const BIOR24_REC: [f64; 3] = [
    0.3535533905932738,
    0.7071067811865476,
    0.3535533905932738,
];
pub(crate) const BIOR44_DEC: [f64; 9] = [
    0.03782845550699546,
    -0.02384946501938,
    -0.1106244044184234,
    0.37740285561265374,
    0.8526986790094034,
    0.37740285561265374,
    -0.1106244044184234,
    -0.02384946501938,
    0.03782845550699546,
];
pub(crate) const BIOR44_REC: [f64; 7] = [
    -0.06453888262893843,
    -0.04068941760955844,
    0.4180922732222122,
    0.7884856164056644,
    0.4180922732222122,
    -0.04068941760955844,
    -0.06453888262893843,
];
pub(crate) const BIOR55_DEC: [f64; 9] = [
    0.03968708834786253,
    0.007948108637387725,
    -0.054463788468356235,
    0.345605281955886,
    0.736660181427535,
    0.345605281955886,
    -0.054463788468356235,
    0.007948108637387725,
    0.03968708834786253,
];
pub(crate) const BIOR55_REC: [f64; 11] = [
    0.013456709459419522,
    -0.0026949668806074004,
    -0.13670658466396474,
    -0.09350469740066429,
    0.47680326579781895,
    0.899506109749091,
    0.47680326579781895,
    -0.09350469740066429,
    -0.13670658466396474,
    -0.0026949668806074004,
    0.013456709459419522,
];
