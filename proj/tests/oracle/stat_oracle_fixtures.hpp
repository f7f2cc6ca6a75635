// Generated by tests/oracle/gen_stat_fixtures.py -- do not edit by hand.
#pragma once
#include <vector>

namespace oracle {
inline const std::vector<double> normal_cdf_grid = {-8.0, 6.22096057427174e-16, -7.919597989949748, 1.191398589789271e-15, -7.839195979899498, 2.2672019004515115e-15, -7.758793969849246, 4.287040326428318e-15, -7.678391959798995, 8.054897025730041e-15, -7.597989949748744, 1.50382841571091e-14, -7.517587939698492, 2.7898014265774453e-14, -7.437185929648241, 5.1426370385307496e-14, -7.35678391959799, 9.419696732148033e-14, -7.276381909547739, 1.7144599729559244e-13, -7.1959798994974875, 3.1006882531459873e-13, -7.115577889447236, 5.572244349212103e-13, -7.035175879396985, 9.950490629020273e-13, -6.954773869346734, 1.7656400075952054e-12, -6.874371859296483, 3.1131798485980805e-12, -6.793969849246231, 5.454459695899215e-12, -6.71356783919598, 9.496112842120713e-12, -6.633165829145729, 1.6428116020775113e-11, -6.552763819095477, 2.824090559662419e-11, -6.472361809045227, 4.8241374800759925e-11, -6.391959798994975, 8.188648094236872e-11, -6.311557788944723, 1.3812030580454882e-10, -6.231155778894472, 2.3150320399994356e-10, -6.150753768844221, 3.8557781378821495e-10, -6.07035175879397, 6.381519106615875e-10, -5.989949748743719, 1.049529421145625e-09, -5.909547738693467, 1.7152412710753493e-09, -5.829145728643216, 2.7855918176510655e-09, -5.748743718592965, 4.495448809962734e-09, -5.668341708542714, 7.209309489911996e-09, -5.5879396984924625, 1.148896996351354e-08, -5.507537688442211, 1.8194376136942207e-08, -5.427135678391959, 2.8632798657486698e-08, -5.346733668341709, 4.4777821442374476e-08, -5.266331658291458, 6.958837540278779e-08, -5.185929648241206, 1.0746997148660526e-07, -5.105527638190955, 1.649363840501987e-07, -5.025125628140703, 2.515515443823749e-07, -4.944723618090452, 3.8125983952399614e-07, -4.864321608040201, 5.742501919442304e-07, -4.78391959798995, 8.595473583923788e-07, -4.703517587939698, 1.2785852817134031e-06, -4.623115577889447, 1.8900947855664877e-06, -4.542713567839196, 2.7767343471241807e-06, -4.4623115577889445, 4.054011113252041e-06, -4.381909547738694, 5.882182604007738e-06, -4.301507537688442, 8.482000117494445e-06, -4.221105527638191, 1.2155354356791095e-05, -4.14070351758794, 1.7312112603759263e-05, -4.060301507537688, 2.450469335337655e-05, -3.9798994974874375, 3.447220462294821e-05, -3.899497487437186, 4.819626876767548e-05, -3.8190954773869343, 6.697095805025425e-05, -3.7386934673366836, 9.248955500931287e-05, -3.658291457286432, 0.0001269511078513761, -3.5778894472361804, 0.00017318994559635298, -3.4974874371859297, 0.00023483141626212193, -3.417085427135678, 0.00031647707378173025, -3.3366834170854274, 0.0004239223203758101, -3.2562814070351758, 0.0005644090621029708, -3.175879396984924, 0.0007469152066625228, -3.0954773869346734, 0.000982481776986595, -3.015075376884422, 0.0012845769911206987, -2.934673366834171, 0.0016694948394352705, -2.8542713567839195, 0.002156783462803324, -2.773869346733668, 0.0027696960118831636, -2.693467336683417, 0.003535653689216127, -2.6130653266331656, 0.004486707418174442, -2.532663316582915, 0.005659981160036229, -2.4522613065326633, 0.007098076467212622, -2.3718592964824117, 0.008849414611184084, -2.291457286432161, 0.010968489787950994, -2.2110552763819094, 0.013516004739513858, -2.1306532663316586, 0.016558858910793502, -2.050251256281407, 0.020169959261372866, -1.9698492462311554, 0.024427825325256506, -1.8894472361809047, 0.02941596327324004, -1.809045226130653, 0.03522198873092203, -1.7286432160804015, 0.04193648500320764, -1.6482412060301508, 0.049651592108026096, -1.5678391959798992, 0.058459332458907165, -1.4874371859296485, 0.06844969085596381, -1.4070351758793969, 0.07970847921170993, -1.3266331658291453, 0.09231502959117344, -1.2462311557788945, 0.10633977201929651, -1.165829145728643, 0.12184176536275149, -1.0854271356783922, 0.1388662596544762, -1.0050251256281406, 0.15744237573833775, -0.924623115577889, 0.17758099237679587, -0.8442211055276383, 0.19927293141645047, -0.7638190954773867, 0.22248752784775605, -0.683417085427136, 0.24717166344509472, -0.6030150753768844, 0.2732493301987543, -0.5226130653266328, 0.30062177328221196, -0.44221105527638205, 0.3291682434300759, -0.36180904522613044, 0.35874736616909475, -0.2814070351758797, 0.38919911138366403, -0.20100502512562812, 0.42034732239002787, -0.12060301507537652, 0.45200274029644383, -0.0402010050251258, 0.48396643819259244, 0.040201005025124914, 0.5160335618074072, 0.12060301507537652, 0.5479972597035562, 0.20100502512562812, 0.5796526776099721, 0.2814070351758797, 0.610800888616336, 0.36180904522613133, 0.6412526338309056, 0.44221105527638116, 0.6708317565699238, 0.5226130653266328, 0.699378226717788, 0.6030150753768844, 0.7267506698012457, 0.683417085427136, 0.7528283365549053, 0.7638190954773876, 0.7775124721522442, 0.8442211055276392, 0.8007270685835497, 0.924623115577889, 0.8224190076232041, 1.0050251256281406, 0.8425576242616623, 1.0854271356783922, 0.8611337403455238, 1.1658291457286438, 0.8781582346372487, 1.2462311557788954, 0.8936602279807035, 1.3266331658291453, 0.9076849704088266, 1.4070351758793969, 0.92029152078829, 1.4874371859296485, 0.9315503091440362, 1.5678391959799, 0.941540667541093, 1.6482412060301517, 0.950348407891974, 1.7286432160804015, 0.9580635149967923, 1.809045226130653, 0.964778011269078, 1.8894472361809047, 0.97058403672676, 1.9698492462311563, 0.9755721746747436, 2.050251256281408, 0.9798300407386272, 2.1306532663316577, 0.9834411410892064, 2.2110552763819094, 0.9864839952604861, 2.291457286432161, 0.989031510212049, 2.3718592964824126, 0.991150585388816, 2.452261306532664, 0.9929019235327874, 2.532663316582914, 0.9943400188399637, 2.6130653266331656, 0.9955132925818255, 2.693467336683417, 0.9964643463107838, 2.773869346733669, 0.9972303039881169, 2.8542713567839204, 0.9978432165371967, 2.9346733668341702, 0.9983305051605648, 3.015075376884422, 0.9987154230088793, 3.0954773869346734, 0.9990175182230134, 3.175879396984925, 0.9992530847933375, 3.2562814070351767, 0.999435590937897, 3.3366834170854265, 0.9995760776796242, 3.417085427135678, 0.9996835229262183, 3.4974874371859297, 0.9997651685837379, 3.5778894472361813, 0.9998268100544037, 3.658291457286433, 0.9998730488921487, 3.7386934673366827, 0.9999075104449907, 3.8190954773869343, 0.9999330290419497, 3.899497487437186, 0.9999518037312323, 3.9798994974874375, 0.9999655277953771, 4.060301507537689, 0.9999754953066466, 4.140703517587941, 0.9999826878873962, 4.221105527638191, 0.9999878446456432, 4.301507537688442, 0.9999915179998825, 4.381909547738694, 0.999994117817396, 4.462311557788945, 0.9999959459888867, 4.542713567839197, 0.9999972232656529, 4.623115577889447, 0.9999981099052144, 4.703517587939698, 0.9999987214147182, 4.78391959798995, 0.9999991404526416, 4.864321608040202, 0.999999425749808, 4.944723618090453, 0.9999996187401605, 5.025125628140703, 0.9999997484484556, 5.105527638190955, 0.999999835063616, 5.185929648241206, 0.9999998925300285, 5.266331658291458, 0.9999999304116246, 5.3467336683417095, 0.9999999552221785, 5.427135678391959, 0.9999999713672013, 5.507537688442211, 0.9999999818056239, 5.5879396984924625, 0.99999998851103, 5.668341708542714, 0.9999999927906905, 5.748743718592966, 0.9999999955045512, 5.829145728643216, 0.9999999972144081, 5.909547738693467, 0.9999999982847587, 5.989949748743719, 0.9999999989504705, 6.07035175879397, 0.9999999993618481, 6.150753768844222, 0.9999999996144222, 6.231155778894472, 0.9999999997684969, 6.311557788944723, 0.9999999998618797, 6.391959798994975, 0.9999999999181135, 6.472361809045227, 0.9999999999517586, 6.552763819095478, 0.9999999999717591, 6.633165829145728, 0.9999999999835719, 6.71356783919598, 0.9999999999905039, 6.793969849246231, 0.9999999999945456, 6.874371859296483, 0.9999999999968868, 6.9547738693467345, 0.9999999999982344, 7.035175879396984, 0.9999999999990049, 7.115577889447236, 0.9999999999994428, 7.1959798994974875, 0.9999999999996899, 7.276381909547739, 0.9999999999998286, 7.356783919597991, 0.9999999999999059, 7.4371859296482405, 0.9999999999999486, 7.517587939698492, 0.9999999999999721, 7.597989949748744, 0.999999999999985, 7.678391959798995, 0.9999999999999919, 7.758793969849247, 0.9999999999999957, 7.839195979899499, 0.9999999999999978, 7.919597989949748, 0.9999999999999988, 8.0, 0.9999999999999993};
inline const std::vector<double> t_cdf_grid = {1.0, -6.0, 0.052568456711253424, 1.0, -5.5, 0.05724914704870017, 1.0, -5.0, 0.06283295818900117, 1.0, -4.5, 0.06960448727306394, 1.0, -4.0, 0.07797913037736932, 1.0, -3.5, 0.08858553278290474, 1.0, -3.0, 0.10241638234956672, 1.0, -2.5, 0.12111894159084335, 1.0, -2.0, 0.1475836176504332, 1.0, -1.5, 0.1871670418109988, 1.0, -1.0, 0.24999999999999978, 1.0, -0.5, 0.3524163823495668, 1.0, 0.0, 0.5, 1.0, 0.5, 0.6475836176504333, 1.0, 1.0, 0.7500000000000002, 1.0, 1.5, 0.8128329581890013, 1.0, 2.0, 0.8524163823495667, 1.0, 2.5, 0.8788810584091566, 1.0, 3.0, 0.8975836176504333, 1.0, 3.5, 0.9114144672170953, 1.0, 4.0, 0.9220208696226307, 1.0, 4.5, 0.930395512726936, 1.0, 5.0, 0.9371670418109989, 1.0, 5.5, 0.9427508529512999, 1.0, 6.0, 0.9474315432887466, 2.0, -6.0, 0.013335736607712385, 2.0, -5.5, 0.0157520015209069, 2.0, -5.0, 0.018874775675311862, 2.0, -4.5, 0.02300095399713801, 2.0, -4.0, 0.028595479208968315, 2.0, -3.5, 0.036413675027234665, 2.0, -3.0, 0.04773298313335456, 2.0, -2.5, 0.0648058601107554, 2.0, -2.0, 0.09175170953613696, 2.0, -1.5, 0.13619656244550046, 2.0, -1.0, 0.21132486540518713, 2.0, -0.5, 0.33333333333333337, 2.0, 0.0, 0.5, 2.0, 0.5, 0.6666666666666667, 2.0, 1.0, 0.7886751345948129, 2.0, 1.5, 0.8638034375544995, 2.0, 2.0, 0.908248290463863, 2.0, 2.5, 0.9351941398892446, 2.0, 3.0, 0.9522670168666455, 2.0, 3.5, 0.9635863249727653, 2.0, 4.0, 0.9714045207910317, 2.0, 4.5, 0.976999046002862, 2.0, 5.0, 0.9811252243246881, 2.0, 5.5, 0.9842479984790932, 2.0, 6.0, 0.9866642633922876, 3.7, -6.0, 0.002482285650369513, 3.7, -5.5, 0.0033341028465065084, 3.7, -5.0, 0.00458198382244666, 3.7, -4.5, 0.006463690855795883, 3.7, -4.0, 0.009394455009390571, 3.7, -3.5, 0.014125493447094179, 3.7, -3.0, 0.022062942805759326, 3.7, -2.5, 0.035911011455913376, 3.7, -2.0, 0.06090860095261697, 3.7, -1.5, 0.10679908460100665, 3.7, -1.0, 0.18907069988022626, 3.7, -0.5, 0.322667816659966, 3.7, 0.0, 0.5, 3.7, 0.5, 0.6773321833400341, 3.7, 1.0, 0.8109293001197737, 3.7, 1.5, 0.8932009153989934, 3.7, 2.0, 0.939091399047383, 3.7, 2.5, 0.9640889885440866, 3.7, 3.0, 0.9779370571942407, 3.7, 3.5, 0.9858745065529058, 3.7, 4.0, 0.9906055449906095, 3.7, 4.5, 0.9935363091442041, 3.7, 5.0, 0.9954180161775533, 3.7, 5.5, 0.9966658971534935, 3.7, 6.0, 0.9975177143496305, 4.85, -6.0, 0.0010251328210044896, 4.85, -5.5, 0.0014924166844646621, 4.85, -5.0, 0.0022324269733873794, 4.85, -4.5, 0.0034422146330481385, 4.85, -4.0, 0.005489672292027799, 4.85, -3.5, 0.009084744241971513, 4.85, -3.0, 0.0156373443521744, 4.85, -2.5, 0.027994975264622194, 4.85, -2.0, 0.05185029194743496, 4.85, -1.5, 0.09783482095895175, 4.85, -1.0, 0.1822782207147367, 4.85, -0.5, 0.3194638292601506, 4.85, 0.0, 0.5, 4.85, 0.5, 0.6805361707398494, 4.85, 1.0, 0.8177217792852634, 4.85, 1.5, 0.9021651790410483, 4.85, 2.0, 0.948149708052565, 4.85, 2.5, 0.9720050247353779, 4.85, 3.0, 0.9843626556478257, 4.85, 3.5, 0.9909152557580285, 4.85, 4.0, 0.9945103277079722, 4.85, 4.5, 0.9965577853669518, 4.85, 5.0, 0.9977675730266126, 4.85, 5.5, 0.9985075833155354, 4.85, 6.0, 0.9989748671789955, 9.0, -6.0, 0.0001012496610338204, 9.0, -5.5, 0.0001900929943408374, 9.0, -5.0, 0.0003694839549016212, 9.0, -4.5, 0.0007444747077058653, 9.0, -4.0, 0.0015552141551929267, 9.0, -3.5, 0.003361757881529476, 9.0, -3.0, 0.007478181955207101, 9.0, -2.5, 0.016930913841492853, 9.0, -2.0, 0.03827641188535047, 9.0, -1.5, 0.08392532802853743, 9.0, -1.0, 0.17171819806895677, 9.0, -0.5, 0.3145356499130132, 9.0, 0.0, 0.5, 9.0, 0.5, 0.6854643500869868, 9.0, 1.0, 0.8282818019310432, 9.0, 1.5, 0.9160746719714626, 9.0, 2.0, 0.9617235881146495, 9.0, 2.5, 0.9830690861585071, 9.0, 3.0, 0.9925218180447929, 9.0, 3.5, 0.9966382421184705, 9.0, 4.0, 0.9984447858448071, 9.0, 4.5, 0.9992555252922941, 9.0, 5.0, 0.9996305160450983, 9.0, 5.5, 0.9998099070056592, 9.0, 6.0, 0.9998987503389662, 24.0, -6.0, 1.7036540358232742e-06, 24.0, -5.5, 5.894234442803532e-06, 24.0, -5.0, 2.07842817990528e-05, 24.0, -4.5, 7.405439814916459e-05, 24.0, -4.0, 0.0002634540363908517, 24.0, -3.5, 0.0009211821773320094, 24.0, -3.0, 0.003102868308262372, 24.0, -2.5, 0.009827087558289377, 24.0, -2.0, 0.028469924968295833, 24.0, -1.5, 0.07332782303410035, 24.0, -1.0, 0.16364344063989256, 24.0, -0.5, 0.31081436115699335, 24.0, 0.0, 0.5, 24.0, 0.5, 0.6891856388430067, 24.0, 1.0, 0.8363565593601074, 24.0, 1.5, 0.9266721769658997, 24.0, 2.0, 0.9715300750317042, 24.0, 2.5, 0.9901729124417107, 24.0, 3.0, 0.9968971316917377, 24.0, 3.5, 0.999078817822668, 24.0, 4.0, 0.9997365459636092, 24.0, 4.5, 0.9999259456018508, 24.0, 5.0, 0.9999792157182009, 24.0, 5.5, 0.9999941057655571, 24.0, 6.0, 0.9999982963459642, 120.0, -6.0, 1.0741519096530163e-08, 120.0, -5.5, 1.0897464675213056e-07, 120.0, -5.0, 9.890952902269818e-07, 120.0, -4.5, 7.91278969929852e-06, 120.0, -4.0, 5.497192131210824e-05, 120.0, -3.5, 0.0003269038699309369, 120.0, -3.0, 0.0016419508601170807, 120.0, -2.5, 0.006884767462515205, 120.0, -2.0, 0.02387926367016417, 120.0, -1.5, 0.0681204176153599, 120.0, -1.0, 0.15966136193221064, 120.0, -0.5, 0.30899536216919865, 120.0, 0.0, 0.5, 120.0, 0.5, 0.6910046378308015, 120.0, 1.0, 0.8403386380677893, 120.0, 1.5, 0.9318795823846401, 120.0, 2.0, 0.9761207363298359, 120.0, 2.5, 0.9931152325374848, 120.0, 3.0, 0.9983580491398829, 120.0, 3.5, 0.999673096130069, 120.0, 4.0, 0.9999450280786879, 120.0, 4.5, 0.9999920872103006, 120.0, 5.0, 0.9999990109047098, 120.0, 5.5, 0.9999998910253532, 120.0, 6.0, 0.9999999892584809, 999.0, -6.0, 1.3781345344522132e-09, 999.0, -5.5, 2.4120976999538652e-08, 999.0, -5.0, 3.3841809479005474e-07, 999.0, -4.5, 3.7969518775850377e-06, 999.0, -4.0, 3.400735491901962e-05, 999.0, -3.5, 0.00024289758248764894, 999.0, -3.0, 0.0013833882300738954, 999.0, -2.5, 0.006289363792254609, 999.0, -2.0, 0.02288530848687849, 999.0, -1.5, 0.0669651773556425, 999.0, -1.0, 0.15877633008820638, 999.0, -0.5, 0.30859259546514467, 999.0, 0.0, 0.5, 999.0, 0.5, 0.6914074045348553, 999.0, 1.0, 0.8412236699117936, 999.0, 1.5, 0.9330348226443574, 999.0, 2.0, 0.9771146915131216, 999.0, 2.5, 0.9937106362077454, 999.0, 3.0, 0.9986166117699261, 999.0, 3.5, 0.9997571024175124, 999.0, 4.0, 0.999965992645081, 999.0, 4.5, 0.9999962030481224, 999.0, 5.0, 0.9999996615819052, 999.0, 5.5, 0.999999975879023, 999.0, 6.0, 0.9999999986218655};
inline const std::vector<double> f_cdf_grid = {1.0, 1.0, 0.02, 0.08943852195031553, 1.0, 1.0, 0.5191666666666667, 0.3974884976852793, 1.0, 1.0, 1.0183333333333333, 0.5028913764648736, 1.0, 1.0, 1.5175, 0.5659019203537154, 1.0, 1.0, 2.0166666666666666, 0.6094178419460654, 1.0, 1.0, 2.5158333333333336, 0.6418901962316692, 1.0, 1.0, 3.015, 0.6673536816673229, 1.0, 1.0, 3.514166666666667, 0.6880286377924645, 1.0, 1.0, 4.013333333333334, 0.7052562605373962, 1.0, 1.0, 4.5125, 0.7199026078137958, 1.0, 1.0, 5.011666666666667, 0.7325558939161934, 1.0, 1.0, 5.510833333333333, 0.7436318105267615, 1.0, 1.0, 6.01, 0.7534337179783756, 1.0, 1.0, 6.509166666666666, 0.7621889600154393, 1.0, 1.0, 7.008333333333334, 0.7700717640979334, 1.0, 1.0, 7.5075, 0.7772182248027351, 1.0, 1.0, 8.006666666666668, 0.7837364184718613, 1.0, 1.0, 8.505833333333333, 0.789713417010623, 1.0, 1.0, 9.005, 0.7952202663262868, 1.0, 1.0, 9.504166666666666, 0.8003155932086741, 1.0, 1.0, 10.003333333333334, 0.8050482663490456, 1.0, 1.0, 10.5025, 0.8094593915535228, 1.0, 1.0, 11.001666666666667, 0.813583829620268, 1.0, 1.0, 11.500833333333334, 0.8174513663152099, 1.0, 1.0, 12.0, 0.8210876249779328, 2.0, 7.0, 0.02, 0.01974552621851922, 2.0, 7.0, 0.5191666666666667, 0.38374266760808506, 2.0, 7.0, 1.0183333333333333, 0.590914373970268, 2.0, 7.0, 1.5175, 0.7165135397390461, 2.0, 7.0, 2.0166666666666666, 0.7965912863487385, 2.0, 7.0, 2.5158333333333336, 0.8497886082325281, 2.0, 7.0, 3.015, 0.8863583096252577, 2.0, 7.0, 3.514166666666667, 0.9122348961051867, 2.0, 7.0, 4.013333333333334, 0.9310040091756933, 2.0, 7.0, 4.5125, 0.944912887776952, 2.0, 7.0, 5.011666666666667, 0.9554151788247779, 2.0, 7.0, 5.510833333333333, 0.9634774740836857, 2.0, 7.0, 6.01, 0.9697582898961574, 2.0, 7.0, 6.509166666666666, 0.9747160203566085, 2.0, 7.0, 7.008333333333334, 0.9786759489584852, 2.0, 7.0, 7.5075, 0.981872925244679, 2.0, 7.0, 8.006666666666668, 0.9844791753609796, 2.0, 7.0, 8.505833333333333, 0.9866228046321216, 2.0, 7.0, 9.005, 0.9884003410877644, 2.0, 7.0, 9.504166666666666, 0.9898853860635155, 2.0, 7.0, 10.003333333333334, 0.9911346743003261, 2.0, 7.0, 10.5025, 0.9921923808512978, 2.0, 7.0, 11.001666666666667, 0.9930932228860914, 2.0, 7.0, 11.500833333333334, 0.9938647211723196, 2.0, 7.0, 12.0, 0.9945288677649008, 3.0, 12.0, 0.02, 0.004055430828260737, 3.0, 12.0, 0.5191666666666667, 0.322973707677543, 3.0, 12.0, 1.0183333333333333, 0.5812733039107603, 3.0, 12.0, 1.5175, 0.7396928333585429, 3.0, 12.0, 2.0166666666666666, 0.834625321163905, 3.0, 12.0, 2.5158333333333336, 0.8922780862728342, 3.0, 12.0, 3.015, 0.9280880969886734, 3.0, 12.0, 3.514166666666667, 0.950878831009967, 3.0, 12.0, 4.013333333333334, 0.9657319064050265, 3.0, 12.0, 4.5125, 0.9756300144343332, 3.0, 12.0, 5.011666666666667, 0.9823634762975166, 3.0, 12.0, 5.510833333333333, 0.9870316881082031, 3.0, 12.0, 6.01, 0.990324810163166, 3.0, 12.0, 6.509166666666666, 0.9926852181441361, 3.0, 12.0, 7.008333333333334, 0.9944020391243491, 3.0, 12.0, 7.5075, 0.995667694266123, 3.0, 12.0, 8.006666666666668, 0.9966124165515576, 3.0, 12.0, 8.505833333333333, 0.9973257361207485, 3.0, 12.0, 9.005, 0.9978701005551245, 3.0, 12.0, 9.504166666666666, 0.9982896587072252, 3.0, 12.0, 10.003333333333334, 0.9986160172741222, 3.0, 12.0, 10.5025, 0.9988720706525516, 3.0, 12.0, 11.001666666666667, 0.9990745851325601, 3.0, 12.0, 11.500833333333334, 0.999235965786513, 3.0, 12.0, 12.0, 0.9993654796251848, 5.0, 2.0, 0.02, 0.0004948251479274203, 5.0, 2.0, 0.5191666666666667, 0.23976254262239335, 5.0, 2.0, 1.0183333333333333, 0.43679647549554684, 5.0, 2.0, 1.5175, 0.5571643466410295, 5.0, 2.0, 2.0166666666666666, 0.6361264007574162, 5.0, 2.0, 2.5158333333333336, 0.6915091425376643, 5.0, 2.0, 3.015, 0.7323885080550563, 5.0, 2.0, 3.514166666666667, 0.7637612178860004, 5.0, 2.0, 4.013333333333334, 0.7885809011027564, 5.0, 2.0, 4.5125, 0.8086984837207923, 5.0, 2.0, 5.011666666666667, 0.8253304125333283, 5.0, 2.0, 5.510833333333333, 0.839308085917925, 5.0, 2.0, 6.01, 0.8512186026950279, 5.0, 2.0, 6.509166666666666, 0.8614881473486004, 5.0, 2.0, 7.008333333333334, 0.8704334797339085, 5.0, 2.0, 7.5075, 0.8782948793092235, 5.0, 2.0, 8.006666666666668, 0.8852578816617446, 5.0, 2.0, 8.505833333333333, 0.8914680103226665, 5.0, 2.0, 9.005, 0.8970409997667308, 5.0, 2.0, 9.504166666666666, 0.9020700396185799, 5.0, 2.0, 10.003333333333334, 0.9066310047990117, 5.0, 2.0, 10.5025, 0.9107862953948667, 5.0, 2.0, 11.001666666666667, 0.9145876987837115, 5.0, 2.0, 11.500833333333334, 0.9180785524432014, 5.0, 2.0, 12.0, 0.9212953988640339, 8.0, 40.0, 0.02, 2.0998270767586414e-06, 8.0, 40.0, 0.5191666666666667, 0.16512809395991337, 8.0, 40.0, 1.0183333333333333, 0.5617912772454776, 8.0, 40.0, 1.5175, 0.8181006354945682, 8.0, 40.0, 2.0166666666666666, 0.9308700170223443, 8.0, 40.0, 2.5158333333333336, 0.9743445467546125, 8.0, 40.0, 3.015, 0.9904219125410382, 8.0, 40.0, 3.514166666666667, 0.996351313756488, 8.0, 40.0, 4.013333333333334, 0.9985721879951709, 8.0, 40.0, 4.5125, 0.999424385196508, 8.0, 40.0, 5.011666666666667, 0.9997607341492717, 8.0, 40.0, 5.510833333333333, 0.9998974825165565, 8.0, 40.0, 6.01, 0.999954761754662, 8.0, 40.0, 6.509166666666666, 0.9999794650767012, 8.0, 40.0, 7.008333333333334, 0.9999904239219065, 8.0, 40.0, 7.5075, 0.9999954186029976, 8.0, 40.0, 8.006666666666668, 0.999997754375734, 8.0, 40.0, 8.505833333333333, 0.9999988737441917, 8.0, 40.0, 9.005, 0.9999994227609946, 8.0, 40.0, 9.504166666666666, 0.9999996980184203, 8.0, 40.0, 10.003333333333334, 0.9999998389244178, 8.0, 40.0, 10.5025, 0.9999999124910584, 8.0, 40.0, 11.001666666666667, 0.9999999516242956, 8.0, 40.0, 11.500833333333334, 0.9999999728130017, 8.0, 40.0, 12.0, 0.9999999844801389, 2.0, 100.0, 0.02, 0.019797406935945745, 2.0, 100.0, 0.5191666666666667, 0.40338892290322115, 2.0, 100.0, 1.0183333333333333, 0.6350890731457651, 2.0, 100.0, 1.5175, 0.7757351405345021, 2.0, 100.0, 2.0166666666666666, 0.8615240661164196, 2.0, 100.0, 2.5158333333333336, 0.9141011897190965, 2.0, 100.0, 3.015, 0.9464743525027876, 2.0, 100.0, 3.514166666666667, 0.9664986836350342, 2.0, 100.0, 4.013333333333334, 0.9789403462158757, 2.0, 100.0, 4.5125, 0.9867047890432348, 2.0, 100.0, 5.011666666666667, 0.9915713100814385, 2.0, 100.0, 5.510833333333333, 0.9946344670716626, 2.0, 100.0, 6.01, 0.9965705728371933, 2.0, 100.0, 6.509166666666666, 0.997799329236566, 2.0, 100.0, 7.008333333333334, 0.9985823043788427, 2.0, 100.0, 7.5075, 0.999083197451834, 2.0, 100.0, 8.006666666666668, 0.9994048797381471, 2.0, 100.0, 8.505833333333333, 0.9996122589922061, 2.0, 100.0, 9.005, 0.9997464524129618, 2.0, 100.0, 9.504166666666666, 0.9998336084203862, 2.0, 100.0, 10.003333333333334, 0.9998904199844905, 2.0, 100.0, 10.5025, 0.9999275840553935, 2.0, 100.0, 11.001666666666667, 0.9999519807717541, 2.0, 100.0, 11.500833333333334, 0.9999680515206004, 2.0, 100.0, 12.0, 0.999978673688819, 10.0, 10.0, 0.02, 3.419168704086709e-07, 10.0, 10.0, 0.5191666666666667, 0.1580926929646962, 10.0, 10.0, 1.0183333333333333, 0.5111756130020582, 10.0, 10.0, 1.5175, 0.7392170463178125, 10.0, 10.0, 2.0166666666666666, 0.8579679239634187, 10.0, 10.0, 2.5158333333333336, 0.9191448951183991, 10.0, 10.0, 3.015, 0.9517963374380932, 10.0, 10.0, 3.514166666666667, 0.9700170560068464, 10.0, 10.0, 4.013333333333334, 0.9806373004245696, 10.0, 10.0, 4.5125, 0.9870783065978077, 10.0, 10.0, 5.011666666666667, 0.99112552803554, 10.0, 10.0, 5.510833333333333, 0.9937496711257315, 10.0, 10.0, 6.01, 0.9954990633087865, 10.0, 10.0, 6.509166666666666, 0.9966944406296623, 10.0, 10.0, 7.008333333333334, 0.9975294262991055, 10.0, 10.0, 7.5075, 0.9981242811915498, 10.0, 10.0, 8.006666666666668, 0.9985556431918108, 10.0, 10.0, 8.505833333333333, 0.9988734984156218, 10.0, 10.0, 9.005, 0.9991111438476533, 10.0, 10.0, 9.504166666666666, 0.9992911887696455, 10.0, 10.0, 10.003333333333334, 0.99942925641099, 10.0, 10.0, 10.5025, 0.9995363170729071, 10.0, 10.0, 11.001666666666667, 0.9996201882095574, 10.0, 10.0, 11.500833333333334, 0.9996865167217011, 10.0, 10.0, 12.0, 0.9997394331497595, 19.0, 57.0, 0.02, 3.579095429667599e-13, 19.0, 57.0, 0.5191666666666667, 0.05762453610762853, 19.0, 57.0, 1.0183333333333333, 0.5441624727127692, 19.0, 57.0, 1.5175, 0.8856875235325257, 19.0, 57.0, 2.0166666666666666, 0.9782365884267117, 19.0, 57.0, 2.5158333333333336, 0.9961840937247749, 19.0, 57.0, 3.015, 0.9993288264801253, 19.0, 57.0, 3.514166666666667, 0.9998769747807774, 19.0, 57.0, 4.013333333333334, 0.9999761087920489, 19.0, 57.0, 4.5125, 0.9999950543395667, 19.0, 57.0, 5.011666666666667, 0.999998907597092, 19.0, 57.0, 5.510833333333333, 0.999999742938208, 19.0, 57.0, 6.01, 0.9999999357340587, 19.0, 57.0, 6.509166666666666, 0.9999999829871387, 19.0, 57.0, 7.008333333333334, 0.9999999952474656, 19.0, 57.0, 7.5075, 0.9999999986038163, 19.0, 57.0, 8.006666666666668, 0.9999999995700568, 19.0, 57.0, 8.505833333333333, 0.9999999998616442, 19.0, 57.0, 9.005, 0.9999999999536061, 19.0, 57.0, 9.504166666666666, 0.9999999999838322, 19.0, 57.0, 10.003333333333334, 0.9999999999941586, 19.0, 57.0, 10.5025, 0.9999999999978169, 19.0, 57.0, 11.001666666666667, 0.9999999999991578, 19.0, 57.0, 11.500833333333334, 0.9999999999996652, 19.0, 57.0, 12.0, 0.9999999999998631};
inline const std::vector<double> normal_quantile_grid = {1e-12, -7.034483825301131, 1e-06, -4.753424308822899, 0.001, -3.090232306167813, 0.025, -1.9599639845400545, 0.05, -1.6448536269514729, 0.2, -0.8416212335729142, 0.5, 0.0, 0.8, 0.8416212335729143, 0.975, 1.959963984540054, 0.999, 3.090232306167813, 0.999999999, 5.997807019601637};
// welch_cases: per case {n_a, n_b, t, df, p_one_sided_greater}
inline const std::vector<double> welch_expected = {4, 3, 2.6678918753996617, 4.849596022374147, 0.0229279208306513, 4, 3, 0.0, 4.959183673469387, 0.5, 5, 5, 0.12283327485485154, 7.9817791542645, 0.4526378390150152, 3, 4, 1.7320508075688774, 4.959183673469387, 0.07214652154197178, 4, 3, -0.15430334996209188, 3.0478994016574408, 0.556488327445582, 6, 3, -1.5958626340564337, 2.4667403046308762, 0.8860862089369737, 2, 5, -0.17960530202677485, 1.5157728706624607, 0.56075041127179, 7, 4, 5.284229075567876, 8.89473684210526, 0.0002621239995090877};
inline const std::vector<std::vector<double>> welch_samples_a = {
  {2.1, 2.5, 2.3, 2.2},
  {1.0, 2.0, 3.0, 4.0},
  {0.1, 0.2, 0.15, 0.3, 0.25},
  {10.0, 11.0, 12.0},
  {-1.0, 0.0, 1.0, 2.0},
  {5.0, 5.1, 4.9, 5.2, 4.8, 5.05},
  {0.0, 1.0},
  {3.2, 2.9, 3.4, 3.1, 3.0, 3.3, 2.8},
};
inline const std::vector<std::vector<double>> welch_samples_b = {
  {1.9, 2.0, 2.1},
  {1.5, 2.5, 3.5},
  {0.1, 0.2, 0.15, 0.3, 0.22},
  {8.0, 9.0, 10.0, 11.0},
  {0.5, 0.6, 0.7},
  {5.0, 5.3, 5.6},
  {1.0, 0.0, 1.0, 0.0, 1.0},
  {2.5, 2.6, 2.4, 2.7},
};
// anova_cases: per case {k, N, F, p_two_sided}
inline const std::vector<double> anova_expected = {3, 6, 4.0, 0.14242717305466185, 2, 6, 0.015000000000000029, 0.9084300584902204, 3, 12, 75.80427631578947, 2.334168935406073e-06, 3, 11, 13.50184774575017, 0.002728376872418877, 3, 13, 0.9829059829059829, 0.4076515803868924, 3, 10, 0.04666666666666636, 0.9546998380380969};
inline const std::vector<std::vector<std::vector<double>>> anova_groups = {
  {{1.0, 2.0}, {2.0, 3.0}, {3.0, 4.0}},
  {{1.0, 2.0, 3.0}, {1.1, 2.1, 3.1}},
  {{0.0, 0.1, 0.2, 0.1}, {1.0, 1.2, 0.9}, {0.5, 0.4, 0.6, 0.5, 0.55}},
  {{10.0, 12.0, 11.0, 13.0}, {9.0, 8.5, 9.5}, {12.0, 13.0, 14.0, 12.5}},
  {{0.0, 1.0, 0.0, 1.0, 1.0}, {1.0, 1.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}},
  {{2.0, 2.2, 1.8}, {2.1, 1.9, 2.0}, {2.05, 1.95, 2.0, 2.1}},
};
// ols_cases: meta {n, k}; design row-major; expected per coef {beta, se, p}
inline const std::vector<double> ols_meta = {12.0, 2.0, 20.0, 3.0, 30.0, 4.0, 15.0, 2.0, 40.0, 4.0};
inline const std::vector<double> ols_design_0 = {1.0, 0.48398252773810624, 1.0, -0.05369281733950327, 1.0, 0.4667864289572402, 1.0, 0.20227489929360437, 1.0, -0.6886451323181887, 1.0, -1.477784528155524, 1.0, 1.192569751031565, 1.0, -0.14891127015630198, 1.0, -1.6157736780384722, 1.0, -1.2093271792576479, 1.0, 0.1494680262444813, 1.0, 0.5792296003234518};
inline const std::vector<double> ols_y_0 = {0.5207545567545172, -1.2661128876301864, 0.7296209080094768, -0.7143161794879977, -1.420410479033385, -2.1330045862885654, 2.00712800353839, 0.25393549017646544, -3.5735911146045853, -1.9171075530221215, -0.3071988365062323, 1.915374873550053};
inline const std::vector<double> ols_expected_0 = {-0.18357042912300053, 0.19742215107054414, 0.3743568236064615, 1.7464109059893524, 0.22759143437271376, 1.6930321788374107e-05};
inline const std::vector<double> ols_design_1 = {1.0, 0.8320058097583747, -0.25151869659533427, 1.0, -0.3912236762466772, 0.4457394572977343, 1.0, 0.8912779427376437, -1.174691054675202, 1.0, -0.10247477585085472, -1.2280930954653904, 1.0, -0.48090458587778706, 1.3043727980885194, 1.0, 0.34194238400077515, 0.8891889950077446, 1.0, -0.6400178148676527, -0.5268808618444643, 1.0, 1.417216684835506, -0.5902358673502571, 1.0, 0.5810767204023438, 1.2101961960577823, 1.0, -0.8956475252776347, 1.1405525585875231, 1.0, 1.9991111643070247, 0.6245877912101222, 1.0, 1.3551601541346652, -0.9538020716153551, 1.0, 0.35643845224631865, 0.8567691733237173, 1.0, 0.08447218420877953, -0.26963399720493797, 1.0, 0.042139576332922785, 0.016486310058618732, 1.0, -0.1561260352036905, 0.5588325765147646, 1.0, 0.9746605834983982, -1.0313840916611656, 1.0, 1.4465920120871274, -1.1100753894280078, 1.0, -0.2401402445120556, 0.6658588832205816, 1.0, 0.406211558458678, 1.1262913180565013};
inline const std::vector<double> ols_y_1 = {3.859219458236426, 0.9180183839221159, 3.157172249627034, 1.9020872400497553, 1.123422579049026, 0.4464494462807156, 0.9330100491933349, 3.5300850495141214, 0.844497508671131, 0.11222636702638877, 3.2515364379923946, 2.487963842118461, 1.3275977288843555, 1.4042914589445026, 1.9469956159932453, 1.5962262351232868, 3.0234718331544257, 3.00595043753078, 1.0574953383644834, 1.0607270052787052};
inline const std::vector<double> ols_expected_1 = {1.5440872311563003, 0.1489270726002581, 9.091358169343735e-09, 0.8920111291266879, 0.18080505206108763, 0.00012595200580202567, -0.511233835572018, 0.15840505010870817, 0.004947156768954063};
inline const std::vector<double> ols_design_2 = {1.0, -0.2346514549166444, 1.499820592642835, -0.3566971894211657, 1.0, 0.23511773244761078, -0.4876532256270072, -0.6372677912306652, 1.0, -0.24317063234836966, -0.7379652064506298, 1.148113993069596, 1.0, -0.41969958292622855, 1.1110037455464448, 0.005377060444561863, 1.0, 0.7268400904194708, 0.35281256097775676, -0.9123847805295037, 1.0, 0.32416527734300915, -2.16623114723828, -0.8609970905367902, 1.0, -0.45810046668986987, 0.4530185497748424, -0.1926091525848014, 1.0, 1.4364779380375405, 0.6118752519924604, 1.7370199088150664, 1.0, 0.7185156397039616, -0.33017270783898134, 0.9513656067042813, 1.0, -1.8046277011236929, -1.0559530023738093, -1.096799761342123, 1.0, 0.8545153948270128, 1.2064352083821617, 0.32667414128520145, 1.0, 2.059963939787767, -0.8065619845446222, -1.9444534080106481, 1.0, -0.4994591142528411, 1.3295661827980831, 3.0110978384943556, 1.0, -0.4952143746270751, -0.08991455479409749, 0.19084553660544892, 1.0, 0.8338771139262374, 0.46976647910192654, 1.3593768501974082, 1.0, -0.21379314323544538, 0.4042276046439202, 2.3066027809102057, 1.0, 0.03910340851193539, -0.7080394759914321, 0.7389536586361071, 1.0, -1.2812425780254921, 0.5793943391488776, 0.5697170996755498, 1.0, 0.8284890697477588, 2.013893555663243, 1.1870132282723036, 1.0, -1.139788143771319, -0.8515223793839891, -0.7816133409346189, 1.0, 0.26625695193606735, -0.5615647571929829, 0.17402777028249974, 1.0, 1.1464401936942368, -0.05839192628851797, -0.5252822037844271, 1.0, 0.36854969822539596, 1.7855184603537277, 1.1614215972947617, 1.0, -1.5853043359131134, -1.5504085922853532, -1.2695213534520853, 1.0, -1.3430413004986541, -0.6598871281025396, -0.5141903901102387, 1.0, 0.5404459310777974, -0.1834968490061454, 1.741576298201559, 1.0, -0.5121326317938618, 0.17036996692247672, -2.2902387701050397, 1.0, -1.2025536834008344, 2.0180113820595444, 0.8483736156123753, 1.0, -0.533056787591621, 0.17677876812993415, -0.9776805824178393, 1.0, -1.1763972830648173, -0.9702840703120341, -0.1396799653740319};
inline const std::vector<double> ols_y_2 = {1.794498831411743, 2.365486231088843, -1.2624988473982617, 1.7344844509578807, 0.8749972394771834, 0.6043520012824235, 0.6503843460995016, -1.9542285884870028, 0.6690355630323506, 3.2795810212023477, -1.5450978205058394, 0.7177579594932464, -1.6007633216996393, 0.5428375894197159, -1.00005191564794, -2.1414271334313097, 0.24148623805115219, 1.7667690815332966, -2.3469855918105536, 3.6941484009479177, 0.4163066019424495, 1.0145336746366116, -0.39501047702085107, 4.383108719161257, 2.286222693957108, -0.9573320298120378, 3.8576262305668285, 1.2024497231018483, 2.522009623145048, 3.555133038768949};
inline const std::vector<double> ols_expected_2 = {0.9207577091985062, 0.1414196417794369, 6.679660765057842e-07, -1.0055999647842904, 0.15149211540210578, 4.848104850309616e-07, -0.0910638187265131, 0.15283374908351452, 0.5564368398665045, -1.0410986668615463, 0.12965442881781797, 1.6496934447566532e-08};
inline const std::vector<double> ols_design_3 = {1.0, 2.1314537564771165, 1.0, 1.3343296780470753, 1.0, 0.39604861949197706, 1.0, 0.39622672360622657, 1.0, 1.4141530757798875, 1.0, -1.527643607242752, 1.0, -2.2632331860197974, 1.0, 0.22004607854135702, 1.0, 0.06339237002033132, 1.0, -1.3554779562182768, 1.0, 0.5683211930233251, 1.0, 0.48088484481813276, 1.0, -0.7394746437181662, 1.0, -0.7361881308062938, 1.0, -3.5256854868836727};
inline const std::vector<double> ols_y_3 = {4.82829729521262, 4.1109889524822725, -0.04175177353648796, 1.8975316310753407, 4.402595974088464, -5.114673450723421, -6.961663696560198, 0.5011754422865646, -0.6493116183050852, -4.770456221549881, 1.288764836310679, 2.0564479879043365, -2.181911383324046, -1.953385032370614, -10.041682013591346};
inline const std::vector<double> ols_expected_3 = {-0.23886056117084092, 0.1742363187977259, 0.19361035259533377, 2.878321979964567, 0.11918649979987905, 3.477822345511019e-12};
inline const std::vector<double> ols_design_4 = {1.0, 0.20736193514368487, -0.5152907129243169, -0.5741027914082242, 1.0, -1.0541078229522036, -1.473638327140018, 0.7130201508457997, 1.0, -1.6154340849118043, -1.0457814896755566, 0.8087579853572311, 1.0, 2.0144914411937758, 1.7576837843500985, 0.11941614222037253, 1.0, -0.14632915357170354, -0.052354275808332344, 0.031450742175136596, 1.0, -0.4793621578222175, -0.8632801618439023, 0.6207426750853797, 1.0, 0.5473833366736155, 1.2558342658556978, -0.35972146358892076, 1.0, -0.6477454644239771, -0.6179978609285877, 0.8387701189803867, 1.0, 0.7125322450112376, 1.2864232989441056, 0.7973890620923358, 1.0, 0.6371448675568033, 1.282139537426924, -0.1168461113818122, 1.0, -0.9313660461058263, 0.36403040060966146, -0.3230445624586719, 1.0, -0.28286326080034196, -1.2963111209879432, 1.6632625606077631, 1.0, 1.4873946933783861, -0.5239031231168298, 0.22646142364099853, 1.0, 0.9684024326550396, 0.7351227000485362, 1.4774608841265915, 1.0, -0.21771652972331315, -0.7877356698183557, 0.13186264591295227, 1.0, 0.9057080527570945, -1.4357721684438325, 0.005251706352246671, 1.0, 0.892408999693127, -1.477350776734251, -0.9043125389996435, 1.0, 0.5006591611705704, 0.260886568738126, -1.083764043169701, 1.0, 0.12787261638448852, 0.5164945528317811, -0.46286571899058454, 1.0, -1.3081191606711249, -0.8986890445369731, 0.43451557265440083, 1.0, -1.0089389578982542, -1.6337089610577749, -2.033649867133936, 1.0, -0.985210859956481, 2.271261106816231, -1.163088689700359, 1.0, 0.11702283387928426, -0.3610436598496944, 1.3812221464151717, 1.0, 0.747968141679778, -0.0864389887317169, 0.33319172970760624, 1.0, 0.43366468764775756, 0.46725961337428445, 0.2805107964416669, 1.0, -0.4100047171308548, -0.6886626981635253, -0.20936858832693603, 1.0, -0.6793394215295592, -0.2527478376866317, 0.07914430300474866, 1.0, -0.7325846473736491, 1.675683008069369, 0.3879259706305452, 1.0, -1.4291228069111048, -1.1409446118692324, 0.9250249039054177, 1.0, 1.7744489356694524, 0.48742829210302424, 0.5300702536920712, 1.0, 0.7193424147103243, 0.6563595056819203, -0.13087303457803473, 1.0, 0.34919781610235334, -0.8569530563887472, -0.569249506199867, 1.0, -1.1252574025046416, -0.03547975989261325, -0.017170978049205844, 1.0, 0.5824929670082092, 0.21877851681324462, -0.10592372077451317, 1.0, 1.1796651503963507, 0.17592232201469976, -1.8241820974047414, 1.0, -0.45905531454257575, -0.26618932308236226, -0.16711838907960122, 1.0, -0.30124781650670335, 0.9577562426858776, -1.265375453220531, 1.0, -0.35333959018752326, 1.0098960990344918, 2.1079953418590183, 1.0, 1.3352880466122354, -0.1991860207025047, -0.5777953536347628, 1.0, 0.9834928341669535, -1.9052237266320167, 0.2692274419035089};
inline const std::vector<double> ols_y_4 = {0.9393529410226901, -1.6618863469819045, -2.3275939139936606, 2.4713512328659295, 1.891328441186317, -0.13784008589543173, 1.185466104979159, -1.0939909995988555, -0.3289708847961094, 1.568495714398025, 1.4164074060603213, -2.2808682055311973, 1.1702123064932866, 0.071963259535885, -0.14432897376452836, 1.3078426239499554, 3.184845534001414, 4.229663401847396, 1.4301262310815073, -2.209223189715413, 3.417605658308239, 3.0227059050537135, -1.5246430178520964, -0.3384886776515713, 0.27034439225643364, -0.007288738105213688, -0.8082373654313154, -1.2427505112140098, -2.5568950250118903, 1.6362289131567853, 2.5462126939023144, 0.33038226688064043, -0.6007254408848071, 1.6448467521125774, 5.234719325020641, 2.5480530587194523, 2.892044135966224, -3.357467663590707, 1.661498169753042, 1.4325932017782255};
inline const std::vector<double> ols_expected_4 = {0.7221748638879889, 0.12442942450321406, 1.270724467152593e-06, 0.8334872785242342, 0.1393192625059954, 7.33224855927085e-07, 0.16326893851695184, 0.12473359068222062, 0.19884846256518254, -1.783496844773801, 0.143382855171445, 1.3484452048300831e-14};
inline const std::vector<double> logit_design_0 = {1.0, -0.7790830810876153, 1.0, 0.17740955415462767, 1.0, -0.5793915906278109, 1.0, -0.5884560852363534, 1.0, -1.525556697156792, 1.0, 0.5821416459307193, 1.0, 1.2399031209994582, 1.0, 1.2472469097050756, 1.0, 0.877364718841012, 1.0, -0.5533837457936924, 1.0, -0.43145294495669423, 1.0, -0.21276617694164146, 1.0, 0.032709113784082915, 1.0, 0.10382952591140654, 1.0, -1.0206059351561279, 1.0, 0.043098150070337356, 1.0, 0.09153652285858357, 1.0, -1.8401363581380976, 1.0, 0.18886639565708913, 1.0, 0.7963486291616052, 1.0, 0.3150168197029568, 1.0, 0.05909031820314772, 1.0, 1.7132504325902629, 1.0, -0.6301753261593992, 1.0, -1.811879332581069, 1.0, -1.0508436531200163, 1.0, -1.3845984812647523, 1.0, -0.31786562104515415, 1.0, -0.6875555911317115, 1.0, 0.27385436771201055, 1.0, 0.9314470452047487, 1.0, -0.9028132107952621, 1.0, 0.010418380947332526, 1.0, -0.19934425085876786, 1.0, 0.39660067014286887, 1.0, 0.04432345258270646, 1.0, -1.3866491433881134, 1.0, 0.6962536020403729, 1.0, -0.25188601553438394, 1.0, 0.29627299953608005, 1.0, 0.1398982845360545, 1.0, 0.7495332077788966, 1.0, 1.2062348726866994, 1.0, 0.5401447860629766, 1.0, 0.7244183718514969, 1.0, 0.9843554097962413, 1.0, -0.3353470668289732, 1.0, -0.6499538334169535, 1.0, 1.3829386661434042, 1.0, -1.309173690858786, 1.0, -1.9608207642564877, 1.0, -0.8948569819332961, 1.0, 1.079981239413536, 1.0, -0.20920046369737005, 1.0, 1.1941403617616746, 1.0, -1.0202106293722337, 1.0, 0.7109930366198253, 1.0, -1.4369179059992343, 1.0, -0.5825428800758099, 1.0, 0.771676711380213};
inline const std::vector<double> logit_y_0 = {0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0};
inline const std::vector<double> logit_expected_0 = {-0.08122312106138398, 0.298741519222251, 0.7857110034613427, 1.4088918095356542, 0.4105538357034137, 0.0005998418551115987};
inline const std::vector<double> logit_design_1 = {1.0, 0.8325214792793278, 0.6272875153549072, 1.0, -0.295296914106215, -1.2232054266769794, 1.0, 0.7702457534552035, -1.2250669028533163, 1.0, -0.31122151788914426, 0.013184812901082841, 1.0, -0.7165566983301066, 1.2088464935486283, 1.0, -0.15527124156087596, -0.78624668560872, 1.0, -1.427981416137989, 0.9042804273278334, 1.0, 0.6262163592864692, 0.8689507684434458, 1.0, -0.6946492914594152, 0.1704390822839731, 1.0, -1.0663304889351886, 0.974713846649308, 1.0, -1.648394229898776, 0.060726365063867756, 1.0, -1.9936597725243987, 0.3046602338702881, 1.0, -0.050446767449442514, 1.0128836655610132, 1.0, -0.7612001654253876, -0.2962327614906987, 1.0, -0.8633970115258197, 1.7285125986260519, 1.0, -1.1952647344353706, 1.1678701962627975, 1.0, 0.3831708634343729, -0.6718511254872819, 1.0, 2.391773053432683, -0.3187205108445056, 1.0, 0.17182477662128498, 0.20331394339329598, 1.0, -1.180048293731768, 1.101988628326993, 1.0, -0.4122197769189004, -2.6396847943141197, 1.0, 1.4436319807735816, 1.2980931290132132, 1.0, 0.667495638538493, 0.315151992641011, 1.0, 0.328527651843464, -0.986659220334524, 1.0, 2.3125866962147192, -2.3187513640533486, 1.0, 0.8053360864916896, 1.2907227793344562, 1.0, 1.1580490797875502, 0.9230021609141625, 1.0, -0.5009477387216367, -0.3743864211901622, 1.0, -1.9777278711571067, -0.055365546781929696, 1.0, 0.7564163658327672, -0.5305674763490381, 1.0, 1.0565702349346413, 1.0053862221503118, 1.0, -1.4767653206397666, -0.25820198587329485, 1.0, -0.07558237148054991, 0.20635820292287105, 1.0, -2.08915252662189, 1.4859936159364866, 1.0, 0.3193341240681674, -0.9332299537968917, 1.0, -0.8628788563494727, -0.2614165933202176, 1.0, 0.7388437221138324, -1.5748465563212644, 1.0, -0.33143535217031617, -1.3879238626118235, 1.0, -0.8487625141106139, 0.2757488727289297, 1.0, -0.5697521021573002, -0.1464322990396553, 1.0, 0.4965620322939122, 0.9138714128781424, 1.0, -0.41064866830779945, -0.23346617213347576, 1.0, 0.30203476167284926, -0.4545076859087146, 1.0, -0.6991457947575392, -0.7192260412357683, 1.0, 0.8202625966066405, -0.020930954780384047, 1.0, 1.0392205918499842, 2.365580890177867, 1.0, 0.6390117974187596, 1.0911273202828584, 1.0, -0.42439499942385844, 1.2999018819661057, 1.0, 0.18397956351339334, -0.19950856516833104, 1.0, -0.19836991313133262, -0.2859768693502626, 1.0, -0.5707261251142585, 1.4908105870004273, 1.0, 1.893641482041831, 0.9410249122479563, 1.0, -0.9062071574872064, -2.275925878644402, 1.0, -1.4326713208881032, 0.8167173778735699, 1.0, -2.084138793033737, 0.8947181818470881, 1.0, -0.9360012892265007, 0.3802834273135868, 1.0, -0.23746932092758113, -0.33552552380913486, 1.0, -1.1528904576997736, -0.302755406637369, 1.0, 1.117047915665863, -2.181521922016896, 1.0, -1.9546149893555098, 0.3313883715729769, 1.0, 0.9407344637412519, -0.15931537625812406, 1.0, -0.7473464696329931, -0.7778314984112399, 1.0, 0.4523666232709771, -0.17931042603057798, 1.0, -0.8799072807308096, 1.2239764591875413, 1.0, 1.3992637533610512, -1.22341365083031, 1.0, 1.1480567105132082, 0.6200456993767034, 1.0, -0.5233174560645985, -1.052004030116487, 1.0, -0.5565210828225708, -0.4471382077181793, 1.0, -1.0430385686056607, 0.029703870675961117, 1.0, -0.9401664697720603, 0.10266180766769861, 1.0, 0.3999455450309768, -1.184805794402996, 1.0, 0.8728355920479522, 0.9184131161753502, 1.0, 1.05969544981319, -0.12162570921798208, 1.0, 1.0195121279428974, 1.4594754092451185, 1.0, 0.4574001594885044, -0.8146251100206761, 1.0, -0.46747039691886544, -0.19781154965325556, 1.0, 0.5661191169337502, -0.6898554389458975, 1.0, 1.3686301170342925, -0.9949454222702782, 1.0, -0.15481381656299636, -0.18257014746765424, 1.0, -0.7575697675310362, 0.7581933633419995, 1.0, 0.016602566485611037, -0.603033215901408, 1.0, -0.3967931608714881, 1.9612969471784982, 1.0, -0.18919606072932213, 1.4450232580945976, 1.0, -2.4690883662987573, -0.681214106129912, 1.0, -0.6072014151601178, 0.12419170638222579, 1.0, -1.14316520590004, 0.8074788066499268, 1.0, 0.7551940976270759, 0.5523673161995433, 1.0, 1.0714288074145568, 0.08851121359745216, 1.0, 0.23468408241159583, -0.7635978230268323, 1.0, 0.03006323467171857, -0.26358874445878366, 1.0, -0.2882049668232262, -0.23759270716239722, 1.0, -0.5400928179532304, 0.5210564621581996, 1.0, 0.8529838817615993, 0.4520684898097259, 1.0, 0.061472337454269436, -1.1921387896197693, 1.0, 0.3726735656506856, 2.2198928373721443, 1.0, 0.30420304380434326, -0.4033956511752154, 1.0, -1.1805806778440775, -1.0642932481715697, 1.0, 0.47036524160692555, -0.7218938793332018, 1.0, -1.1469855108071658, -0.28159246908391855, 1.0, -0.6503705453713341, 0.7008231824854783, 1.0, 0.8497477175947786, 0.5475915112862151, 1.0, 0.05940734507232475, -0.8804743074867785, 1.0, 0.8264721618605415, -1.472223091152712, 1.0, -0.712320821402978, 2.37574338145894, 1.0, -0.3788515974605297, -0.7876255893279884, 1.0, 0.7337335868335639, 1.5717416998034142, 1.0, -0.17526187216222255, -0.713427364096446, 1.0, 0.8853910444021315, -2.501573914437197, 1.0, -1.1463186352171593, -1.1372173273397768, 1.0, 0.5453061992867295, -0.8226952503494918, 1.0, -0.9744762289364408, 1.4583185837159038, 1.0, 0.406213596515869, 0.6762932130106355, 1.0, -0.5523818866868749, -1.1115625704914625, 1.0, 0.4964749742988957, -0.7614491324163956, 1.0, -0.86230588199562, -0.332512098104868, 1.0, 0.46360227486644773, -0.3612842189079133, 1.0, 0.25207452712759865, -1.717054851801658, 1.0, -0.8749147593371692, 0.840635241150934, 1.0, 0.36050291698365167, 0.17730607404688503, 1.0, 0.7181436588241537, -0.16241372156092662};
inline const std::vector<double> logit_y_1 = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0};
inline const std::vector<double> logit_expected_1 = {-1.2109495911864812, 0.22451667654368254, 6.90659523124902e-08, 0.5534742234564906, 0.24908227287569876, 0.026279666586730154, -0.055066573936115006, 0.21175200206777553, 0.7948235087300393};
inline const std::vector<double> logit_design_2 = {1.0, -1.2896115308522313, 1.0, -0.8759501698001452, 1.0, 0.6651036100268487, 1.0, -0.31300187484967773, 1.0, 0.5467620132184762, 1.0, 1.2050193472415813, 1.0, 0.7645354699276968, 1.0, -1.3331842476984195, 1.0, 1.083640825513645, 1.0, -0.1461853058845639, 1.0, -2.1884817596385, 1.0, -0.48290069224143184, 1.0, 0.8030534853232918, 1.0, 0.049163526669516226, 1.0, -1.2218707797449941, 1.0, 0.6847309335433045, 1.0, -0.5988335419374811, 1.0, -0.2188196728057097, 1.0, 0.6622579186023939, 1.0, 0.5371832366186489, 1.0, -0.5556715905832398, 1.0, -1.529573758558052, 1.0, -1.0762638269978362, 1.0, -0.45654152283789534, 1.0, 0.18582580295559348, 1.0, 0.760431878173556, 1.0, -0.4105013979863848, 1.0, -0.5262914911057059, 1.0, 1.204004595605849, 1.0, 0.8565165411638609, 1.0, -0.2109066327858331, 1.0, 0.29333161003821845, 1.0, -1.052634736347602, 1.0, -1.8216145431992425, 1.0, 0.9188671408447843, 1.0, 0.23242053104353705, 1.0, -1.446233110781936, 1.0, 0.7940918537949879, 1.0, -0.6904270044191961, 1.0, 0.6422966039715866, 1.0, -0.903614119602711, 1.0, -0.5630255920652779, 1.0, 0.5681487714684484, 1.0, 0.8680138336398739, 1.0, 0.4607127643450741, 1.0, 1.471169117680263, 1.0, 0.15367474515598092, 1.0, -0.8572286574621513, 1.0, -0.358547541534649, 1.0, -0.5648029280551852, 1.0, 1.5791720625540508, 1.0, -0.19813750184964773, 1.0, -0.42482910479891883, 1.0, -1.0149450309304013, 1.0, 0.7401481438160011, 1.0, 0.540365220437939, 1.0, -0.8966039059421519, 1.0, 0.8455579494572529, 1.0, 1.2595415900815676, 1.0, 0.45013275638661165, 1.0, -1.3284368969390157, 1.0, 1.1820116026485852, 1.0, 0.09083506046668695, 1.0, 0.8307491034347364, 1.0, 0.38683378979886496, 1.0, 1.5980391912652032, 1.0, -0.40826396093357104, 1.0, -0.4421741254391068, 1.0, -0.3280246673275643, 1.0, 1.0397746448794971, 1.0, -0.021587953863361226, 1.0, 1.1459169371441729, 1.0, -0.48130017714813667, 1.0, -0.07718418071228664, 1.0, 0.09397361923482178, 1.0, -0.11336018573366677, 1.0, 0.3385963289614933, 1.0, 1.3424952319890495, 1.0, 0.7781784613762094, 1.0, 0.3701744638313637, 1.0, 0.20535666282327036, 1.0, 0.727637729458123, 1.0, 1.0604014803308333, 1.0, 0.979510229104286, 1.0, 0.17108394490717102, 1.0, -0.05449619604716624, 1.0, 0.4874197681615066, 1.0, 1.6899800573811397, 1.0, 0.030426848451447223, 1.0, -0.24784789232711865, 1.0, 0.40490877903141287, 1.0, 0.6031447268936944, 1.0, 1.2146366842721918, 1.0, -1.4575906384999748, 1.0, 0.6779379069734836, 1.0, 0.35210153523853144, 1.0, 0.5772398499555961, 1.0, -0.0089729216309436, 1.0, -0.8383525057019335, 1.0, 0.6739781004738983, 1.0, 0.25744822095396563, 1.0, 1.1814743745893679, 1.0, 0.09566885063140777, 1.0, 0.31227010553635065, 1.0, 0.3076582442868716, 1.0, -0.30411654841466806, 1.0, -0.9312666814106358, 1.0, 1.892231031228461, 1.0, -0.8459798292044555, 1.0, 0.18230674688168091, 1.0, -0.5986393444060503, 1.0, -0.5194848359510829, 1.0, 1.2354353734402548, 1.0, 0.3556868700668873, 1.0, 1.5507688382794655, 1.0, 0.24365406512592144, 1.0, 0.6940192718910881, 1.0, -0.7080229227021374, 1.0, -1.713299880741791, 1.0, -0.20372309067083333, 1.0, 0.4319856079775524, 1.0, 1.2067703871678248, 1.0, 1.3487506548295272, 1.0, 0.5380997981810882, 1.0, 1.709683802134375, 1.0, -0.8933105399354152, 1.0, 0.5623447507048842, 1.0, -0.7730318692774653, 1.0, -1.619088509943707, 1.0, 1.0177674898684719, 1.0, -1.995910934903976, 1.0, -0.3670560979349559, 1.0, 0.33964334696948606, 1.0, 0.8874300149364103, 1.0, 0.06695426655289607, 1.0, 0.6325477921226226, 1.0, -0.5375283109420674, 1.0, 0.14351886157005805, 1.0, -0.04687755213337164, 1.0, -0.2464992949726417, 1.0, 0.12882730374717336, 1.0, -0.4579238810077625, 1.0, -1.5721538958431966, 1.0, -0.9966618250952446, 1.0, -0.88917822994661, 1.0, -0.37124816098104874, 1.0, 0.4868164112174209, 1.0, -0.9131190953762934, 1.0, 0.7944980862924687, 1.0, -1.066860379181188, 1.0, 2.192867262868839, 1.0, -0.9107193567625942, 1.0, -1.3859213815853948, 1.0, -0.7003121106707669, 1.0, 1.0142224668232855, 1.0, -0.3012937889218242, 1.0, -0.9682805022538303, 1.0, -0.4317171275091731, 1.0, -0.25924142108596765, 1.0, 0.4708010260087077, 1.0, 0.6123009816847383, 1.0, -1.492822639083122, 1.0, -0.09150979869709842, 1.0, -0.9317415688116907, 1.0, 1.047632583380062, 1.0, 0.343325353632673, 1.0, 1.2202478093595106, 1.0, 1.0391319850999778, 1.0, -1.1791270239630913, 1.0, 0.6074722944311793, 1.0, -0.9876851444173224, 1.0, 0.14909480181350634, 1.0, -0.05720562655097671, 1.0, -0.024535144978247908, 1.0, 0.8834716280337442, 1.0, -0.10819089827345243, 1.0, 1.251717257346915, 1.0, 2.6408468717066036, 1.0, -0.5067613199811051, 1.0, -0.02953465302296763, 1.0, 0.041608441215664656, 1.0, 0.025459979154236343, 1.0, -0.8192407770611085, 1.0, -0.5407968580006065, 1.0, -0.1671176707230951, 1.0, 0.8253710205854061, 1.0, 0.4386759881006352, 1.0, 0.5732288212778814, 1.0, -0.4922577512215508, 1.0, 1.3931179364986723, 1.0, 0.3817395570085637, 1.0, 0.6648059939602491, 1.0, -0.1621196861466902, 1.0, -1.245908031474077, 1.0, 0.46118947393154847, 1.0, 0.34985753550423043, 1.0, 0.5430642885119062, 1.0, 1.8187479340862176, 1.0, -0.3039605851301394, 1.0, -0.7998006114870988};
inline const std::vector<double> logit_y_2 = {0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0};
inline const std::vector<double> logit_expected_2 = {-0.1671016173513476, 0.1986454268680961, 0.40023284320743757, 2.7127894909853283, 0.3720392678624956, 3.061245336987097e-13};
inline const std::vector<double> logit_design_3 = {1.0, 0.9761105489672046, -0.6027755078782192, 0.15689449341998205, 1.0, 0.35633881567381676, 1.2102172118429642, 0.5608360050430593, 1.0, 0.060060924816982046, -0.5006182094485484, -0.4514680170181838, 1.0, -1.9181310037331674, -0.42739470622925213, 1.1085317874153195, 1.0, -0.9302870229408233, -0.5599291828590323, 0.13918211991371562, 1.0, 0.2712340653348425, -0.6563527829627799, -1.5255638127308775, 1.0, 0.15392866028439298, -1.7661288950175484, 0.942946628080567, 1.0, 0.8337786627587775, 0.6182247138016379, 1.3688395277706629, 1.0, -0.7530379450805117, 0.5115831348763208, 0.03322949885351459, 1.0, -0.4552207796751413, 0.2239261248475444, 1.4555107813668429, 1.0, 1.5541853424163405, 0.23557413181791068, 0.6933240780077109, 1.0, 0.7552043861033121, -1.1486942581657646, -0.9232177398358923, 1.0, 0.5919611537706735, 0.0540778309560206, -0.13797285547765817, 1.0, -0.8409673590988298, -0.9950972718561396, -0.9262295133437282, 1.0, 0.5093499418082386, 1.2420404114702144, 0.07301715568177462, 1.0, -0.868125438975577, 0.7585120232077689, 1.5541563086306107, 1.0, -0.03170278833357244, -2.4955186405023055, 1.3593949150613158, 1.0, 1.163087501660696, 0.02892095412343017, 0.362623262642701, 1.0, 0.384419756583894, -0.1474220666033105, -1.143217853575531, 1.0, 0.5452324514278895, 1.1349847134629438, -0.6309972721697235, 1.0, 1.0156410823275, 0.5229718161860784, -1.6844761814474645, 1.0, -0.8807573157128848, 0.7264640963555834, 1.3081631162970755, 1.0, -0.6971892525392253, 0.46174920507682976, -0.7354829928994864, 1.0, 0.2867612611233776, 1.3912068511323639, -0.4953446248386737, 1.0, 0.13650611274844976, -1.5769606450607436, 1.317900767749556, 1.0, -0.13071787407409088, 0.728068416840197, -0.4097481768028401, 1.0, 2.650046720083184, 2.3641010169592436, -0.6946752319429668, 1.0, 0.8326930298499766, 0.665244622546301, -0.39052824133054426, 1.0, 0.10489692720559016, 1.013139614839999, 0.681969503100389, 1.0, -1.0802114250415802, 0.17336197776960796, -0.04009436770774139, 1.0, 1.3451159355410638, 0.28254838394561016, 1.5465510813055643, 1.0, 0.16621994795516706, -0.9980000474030292, 0.05051746117008905, 1.0, 0.8040556158713091, -0.6637727249652283, -0.46512699046213996, 1.0, -1.3890100648287413, -1.5080575966213228, 0.7840884438290768, 1.0, 0.38590897248295614, 0.49512669064723414, -0.8931989176111327, 1.0, 0.28445270973216047, 0.5396442471094173, 0.3467825815186028, 1.0, 0.9891924680060162, 0.3308141527479671, 0.18361775391236004, 1.0, -0.2972150360566668, -0.4768561713618047, -0.8665999757711205, 1.0, -0.0615674874520684, 0.2439191287033266, -2.0364197315460313, 1.0, -0.0010239610998149273, -0.6286143874697867, -0.40634376201153427, 1.0, -0.41351438195153223, -0.29115159433162874, -0.339874066472223, 1.0, -0.18365454257164782, -0.4280999079638756, -0.6628831241269394, 1.0, 0.31404107215204835, -1.4805476220710159, 1.7681886988091562, 1.0, -0.3077995427580069, -1.0145666604691899, -0.35907189598321987, 1.0, 0.849767003126489, -0.9920570710685446, 0.5465015416329876, 1.0, 1.7301600516361202, -0.10438525778948812, 0.6739819711064834, 1.0, -0.710317376319752, -1.2663836921521436, -0.7362648819146412, 1.0, -0.8359024640247851, -0.6286479607809696, -0.17808175591051972, 1.0, 0.07736199936846926, -0.5408177166434651, 1.4843666371211843, 1.0, -0.31040627944662746, 0.23564440419643154, -0.7446944378678754, 1.0, 0.45096296102413247, -1.5102702072894711, 0.8495130655229014, 1.0, 1.1485055243446676, 0.8539821797635471, -0.38858253132567916, 1.0, 0.4907955029238026, -1.1734455281462683, 0.4566277626162709, 1.0, 0.35581785743930755, -1.0658812698394833, 0.42525269213419187, 1.0, 0.6710930324157657, 2.959777281911037, 0.33320421345592743, 1.0, -0.4945473380821664, 0.0748293048270424, 0.7688724738866404, 1.0, 0.48090492235266, -0.4179437125181562, 0.733368964656505, 1.0, -0.2191988615900632, -0.5999873446995435, -0.3836239415313054, 1.0, -1.1278280641563576, -0.6236521987301876, -1.3995007055110333, 1.0, -1.085565587104787, -0.969880413625298, -0.9995841438972223, 1.0, 0.4029492121072131, 0.7690057431288049, -0.8209951763989419, 1.0, 0.18298529419671758, -0.2661024276295287, -0.11278633495294361, 1.0, -1.2297808402791375, 0.608131137714064, 1.2484414588116566, 1.0, -1.264532213919574, 0.13931304997825258, -1.1908063868917556, 1.0, 1.9402123348607356, 0.6085799335379606, 0.2229015011785781, 1.0, 1.5654524152348859, -0.017871347185095792, -0.7718101014194886, 1.0, 0.8265956643237492, -1.8444383120810781, -0.19249095056082466, 1.0, -0.39909783594172643, 1.486164242036146, 0.11680571938078112, 1.0, 1.705087589986457, 0.32544497037604525, 1.1679490257274094, 1.0, -0.6648177060826457, -0.10859661366484703, -0.8381271278926885, 1.0, 0.4599636407211492, 1.0842912237136797, 1.379664540802741, 1.0, 1.1636478912502846, -0.4966795776053138, 0.7346336300184428, 1.0, -0.8519883502784745, -1.0380520546132888, -0.9612780098110415, 1.0, -0.5304131747153515, 2.6369554892946647, -0.3276887610316556, 1.0, 0.8502526529606962, 0.7827032697966869, -0.011739518323136229, 1.0, -2.713824881789789, 1.8477775036575124, -0.22271002397602607, 1.0, -1.2517032039002745, -0.11838740381412849, -1.0575665204450597, 1.0, -1.4466944031190823, 0.5703891638650981, 0.14997588938627746, 1.0, 0.3742312996291964, 0.8896565580154681, -0.5965538798572527, 1.0, 0.2858945936738081, -0.8773712865638209, 1.1000077354084823};
inline const std::vector<double> logit_y_3 = {0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0};
inline const std::vector<double> logit_expected_3 = {-0.7856610824379048, 0.2733605305302785, 0.004052013875144171, 1.0661179606887832, 0.3399662450712241, 0.0017129700625132876, -0.23856823491214013, 0.2646857935910025, 0.367414918693445, -0.3064678826649137, 0.30249935725119914, 0.3110032665541691};
inline const std::vector<double> logit_design_4 = {1.0, -0.25279512073169474, 0.033832425068799854, 1.0, 0.9418774483576923, -1.2863932273437217, 1.0, 0.8447208762561388, -0.43937382237379174, 1.0, 0.5350473234529576, -1.8946753348101137, 1.0, 0.42115966098160545, -1.2515132809781961, 1.0, -1.7133990557448295, 0.361792833631539, 1.0, 0.6650177210147074, -0.5662992450920712, 1.0, -1.1857624106339544, -0.3960173709766014, 1.0, -0.398721292582831, 0.25143572452838076, 1.0, 0.6727774998273246, -0.43584826285720263, 1.0, 0.15740231517790856, 0.16656299270430822, 1.0, -0.22439269456499944, -0.509009643923645, 1.0, -0.3402036749624498, -0.32561602819489904, 1.0, -0.7093690696329794, 1.0832956487130885, 1.0, 1.1244336133224249, -1.069061403454087, 1.0, 1.3118345981679904, 0.7601421153827718, 1.0, -0.1861429640856957, -0.2460238383209261, 1.0, 0.4995247272797652, -0.741429414718779, 1.0, 0.5836074240780091, 0.7081627626856084, 1.0, -1.2017729864868392, 0.8244078429444909, 1.0, 1.7296038698694576, 0.6401486564810772, 1.0, -0.19727485081555282, 0.34135342183528783, 1.0, 0.9750194739809013, 0.957981114366268, 1.0, 0.618249537655009, -0.08769946748886005, 1.0, -0.15463478560088476, -0.4839811452813834, 1.0, -0.761332213813795, -0.9348164634661909, 1.0, 1.8785230581954004, 1.8780257225588801, 1.0, 0.24063407957394353, 0.5581841789909144, 1.0, -0.28920841124064356, -1.7667137472258498, 1.0, -0.346381360841124, 0.16304043698761353, 1.0, 0.07395503632378116, 0.7683571515376244, 1.0, 0.42029205053359864, 0.42658848973758545, 1.0, 0.13766640945874578, 0.6660524030393544, 1.0, -0.11475124910008491, 0.6966454791089587, 1.0, -1.7342733306004274, 0.5394680474818215, 1.0, 0.12411320381782319, -0.6062897060267628, 1.0, 1.7565647981055095, -2.4411617097478198, 1.0, -2.592941399326217, 0.03492354092975324, 1.0, 0.734149223065397, 0.3256286961809855, 1.0, 0.8764876351583604, -0.15209695130474687, 1.0, -0.49591117875950835, -1.4318366567770908, 1.0, 0.5048407571485449, -1.4392741483650264, 1.0, -0.8037238691435801, 0.732617154340661, 1.0, -0.48172043408635945, 1.1481825631593296, 1.0, -1.0126125410113151, -1.1019823591091475, 1.0, -0.7314691000059975, -0.2865930803117755, 1.0, 1.560829154068608, -0.2717377816536846, 1.0, -0.4598705718100286, 0.18306551324690706, 1.0, -0.1390272117783052, -1.0882442381140829, 1.0, 2.575920606621931, 0.1303901761665324, 1.0, -0.660676327654751, -0.2545715574064111, 1.0, -0.7265499734733932, -0.35430304026374115, 1.0, -0.9465279718296746, -0.25558556996923276, 1.0, -1.4954368747350355, 1.396496381780784, 1.0, 0.10285613329278571, 0.14713865728856831, 1.0, -2.6080886313017184, 0.5371832467125929, 1.0, -0.471655225262145, -1.9388559888345778, 1.0, -1.525582158347043, 1.6038927799225562, 1.0, -0.99420627842921, 2.2311001927746683, 1.0, -1.8896409095412552, 0.9987652363658998, 1.0, -0.5249119863614407, 1.358206542994222, 1.0, -1.2355996422964166, 0.3540989670950126, 1.0, -0.6122049690579372, -0.43636817601500766, 1.0, 0.19452632684897148, -1.0401930134260011, 1.0, -0.18823980710179392, 0.5786484752039792, 1.0, -1.010424099255259, 0.16010273397694658, 1.0, -0.5699395237448882, 0.13254774245765544, 1.0, 0.7795925219195026, -1.6278588695556984, 1.0, 2.9014834837470787, 0.09442649841936096, 1.0, -0.5809005985373064, -0.6046554852819069, 1.0, 0.3396546808833863, -0.5367163838369832, 1.0, 0.16256422651419353, -0.2916736096401687, 1.0, -0.12469219020761498, -0.8040137107392932, 1.0, -0.5011157262148841, 0.7317902614385099, 1.0, -0.09225262396156131, 0.051570766370907926, 1.0, 0.1772777256131056, -1.7706295189625487, 1.0, -0.8673744312436336, -0.011510632919187264, 1.0, 1.8562977899383346, -0.3966939741350993, 1.0, -0.20764462483046484, 0.163562792292644, 1.0, -0.18010809821897933, 1.0783353608899677, 1.0, 0.6811604898985983, 0.5743702630132231, 1.0, 0.6196521107952934, -0.4057159953508954, 1.0, 0.9929915873171873, -1.4551379685628094, 1.0, 0.4332584104659877, -0.8290804728160196, 1.0, 0.5360810248928584, -0.6211205483192284, 1.0, 0.04377924034280463, -1.1760434911125037, 1.0, 1.0896862203918538, 0.8571836553767721, 1.0, 0.051161809914524854, -0.4879508545913703, 1.0, -0.5134343324739349, 0.6267091426988618, 1.0, 0.5125101950900504, 0.8504529714962324, 1.0, 1.1560794585502412, -1.0883534794589849, 1.0, 0.2687249356083711, -0.20839703479878974, 1.0, 1.1835909431874483, -0.7304917216086159, 1.0, 0.20091845530392122, -0.5576074738254215, 1.0, -2.426350373829856, -1.4015694198137267, 1.0, 1.0952573981715665, 0.1862429344686477, 1.0, 0.5436171844258246, -0.3265346973110216, 1.0, -0.5307771574621438, -0.3172979536440217, 1.0, 1.2967343135024438, 1.643401943750491, 1.0, -1.6265879525373805, -2.4603427805569313, 1.0, 0.044594286096384536, -1.2711045741055875, 1.0, 0.05588492633360139, 1.051570251337638, 1.0, 1.3393774777450436, 0.9192310005459754, 1.0, 0.7321526242176005, -1.452795406282384, 1.0, 2.7391676109108247, 0.2026732976259342, 1.0, 0.06607079359727587, -0.6148957463006873, 1.0, -0.5520918618406091, 1.1957540520279384, 1.0, 0.9099792270039573, -0.02972629387615697, 1.0, 2.527623439721056, 0.2681604833805544, 1.0, 0.8402894330521684, 0.1279439333987448, 1.0, -1.3814917820348156, 1.2465709829247713, 1.0, 0.005748798413331829, -1.0063760317337425, 1.0, -0.4503714139599539, -1.0132383483699514, 1.0, 1.0408969805776966, 0.060757204364506004, 1.0, -1.4212643079376093, 1.9516140493854333, 1.0, 1.3450298263507685, -0.21638929815778582, 1.0, -0.6414180711131455, 0.03137755305918954, 1.0, 0.4568369871871402, -1.4634349249694063, 1.0, 0.4331073800165448, -1.3854905313302226, 1.0, 0.6584543387254194, 0.1023412417072423, 1.0, -0.41734317139743377, -0.01848733425686213, 1.0, -0.019186332341699117, -0.5403313914457945, 1.0, -0.42565098052331896, 0.05114195495717169, 1.0, -0.3484344833562521, 0.2919827357820894, 1.0, 0.4425257929270681, 1.030147327517633, 1.0, -0.38249634182750564, -0.9514238351396296, 1.0, -1.2628216715110125, 0.9994718305358101, 1.0, -0.39405449829417205, -0.535394866088628, 1.0, -0.9391534727040574, 1.3198701669321298, 1.0, -2.2236305883013494, 0.8683781390952923, 1.0, -1.2066190996901045, -0.7964661313224914, 1.0, 0.8028433019948568, -1.3065776144907673, 1.0, 0.6244387517972033, 0.3207710268297576, 1.0, 0.376237351056715, -0.5339632825179919, 1.0, -1.4943711671364885, 0.3612251578071972, 1.0, -1.029069985694671, 0.618683505692266, 1.0, -2.4077207799249827, -1.5575117864099601, 1.0, 0.6244867566984196, 2.0864923883548525, 1.0, -1.8549704646571399, -0.43678360596616145, 1.0, 0.04233322742764524, -1.6504232104102226, 1.0, 1.3162523323271444, -0.07449608291758754, 1.0, 0.8007839571810624, -0.6632288724774177, 1.0, 2.1183811293713304, 0.5821067908961851, 1.0, 0.705633547564427, -2.7236009184417234, 1.0, -0.06961015221569905, -0.11081464687943206, 1.0, -0.1652370358108654, 0.3300935356906684, 1.0, -0.8154008232357969, -0.4193792849188596, 1.0, -0.15710643701932459, -0.3265559161721748, 1.0, -0.3483713289981866, -1.0761174658051127, 1.0, -2.285341726589765, 0.5322509337939758};
inline const std::vector<double> logit_y_4 = {1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0};
inline const std::vector<double> logit_expected_4 = {1.0380141720692702, 0.21687552777038163, 1.6995104359651907e-06, -1.229355636496991, 0.2552823441096052, 1.467064847948836e-06, -0.23625676818290228, 0.22046521114841294, 0.2838869991294042};
inline const std::vector<double> logit_design_5 = {1.0, 0.7094101264892683, -0.9673414022049308, -0.44892625479846066, 1.0, -1.6316383357685054, 0.15025941169685797, -0.19859951045652383, 1.0, 0.9791423346386005, 0.38457073569034617, -0.6338247405310394, 1.0, 0.8362631062595691, 0.7085647078628899, 0.2861617820102392, 1.0, -0.2569295574619354, -1.312797998411649, -0.0022676126771267557, 1.0, -0.7942150390995901, -0.10105540509627936, 1.1349179093066941, 1.0, -0.38806961623011366, 1.7659926714729135, 0.165452518369115, 1.0, -0.11265990742409494, 0.538688393122622, -0.07782720108892675, 1.0, -0.7485860585788987, -0.40423812581630125, -2.8726429561091456, 1.0, -1.8626630416201, 1.3624574729899228, 1.4132894819623436, 1.0, 1.5025262423211043, 0.27722214431042574, 0.7960208320909047, 1.0, 0.2418257357081694, -0.3729168896294614, 0.2143225031966182, 1.0, 0.8814191765127459, -0.9629336221478999, -1.2368333918329835, 1.0, -0.3626005596132381, 0.8308360333381298, -0.3013701808464735, 1.0, -0.6324239987908241, 1.963541769779183, -0.2421255647489233, 1.0, -1.5879123260684007, 0.7292738032084032, -0.840819263046815, 1.0, -0.5352841623903074, -0.6294125025049756, 1.0043351406668515, 1.0, -0.3943050059741254, -0.14930439906311685, -0.6276594364538381, 1.0, 0.8604258675263274, -1.0690135986663805, 0.18071572816035097, 1.0, -0.16187108442077885, 1.2062325697884277, -0.6051003649378893, 1.0, -0.7731268295272313, -0.12795024822504017, -0.05604219555922024, 1.0, -0.27034833185105533, 0.4564220200709514, -0.5080003129427713, 1.0, 3.2888996146537464, 1.3703500771711454, -0.5040496922011316, 1.0, 0.36583605017099063, 0.9065131720502211, 0.6806723814195674, 1.0, -0.14473293049409167, 0.38590446103020914, 0.33589156028224476, 1.0, 1.3640003357356585, -0.9168767268671462, -0.7752260554927658, 1.0, 1.5520162348787652, -0.2574058593290245, -0.1680595108081401, 1.0, 0.3492151464218701, -0.15363717145464997, 0.14718237069734497, 1.0, 0.18913859435386715, -1.02460913785808, 0.26354915009064417, 1.0, 0.35832400062138897, 0.6983261507563595, -0.25634693767953176, 1.0, 0.8971686670330512, 0.6191807293103355, 1.3161379838445593, 1.0, -0.921995259206913, -0.6521485727197249, -1.2662359666081906, 1.0, -0.5974771723242591, -2.600951145904617, -1.890363031240339, 1.0, 1.1730200692757409, 0.8145140652839454, 0.9014369031680255, 1.0, 0.26202576879637374, -0.2945249666996917, 1.1165413326757152, 1.0, -0.4326650869934938, 1.138801863110422, 0.24805082901343478, 1.0, -1.4095796053046765, 1.1399211356329535, -0.5298000484020281, 1.0, 0.9927552187303318, 0.8302003638741672, 0.16085557654090465, 1.0, -0.6915391146799922, 1.4601185814904594, 0.41308568867813145, 1.0, 0.3015608382153706, -0.49900100243441375, 1.1257478801589473, 1.0, -0.73334984245588, 0.5227160968069782, -0.3049591831977964, 1.0, -0.7975149850537853, 0.3673919006156697, 1.5460449040130033, 1.0, 1.516994092289473, -0.6797791088517763, 0.8484001042145424, 1.0, -1.3136152187299786, 0.24436369840823438, 1.3533261528956906, 1.0, -1.4480037007559707, -0.6835553253806588, -1.7788383150070282, 1.0, 1.6067330277596255, 1.1942504972779944, 0.2607205123293914, 1.0, -0.8080790371161027, 0.19650772584434184, -1.7292803714356213, 1.0, 1.2814831823196102, -0.7296534079622871, -0.6610533265405949, 1.0, 0.43182279985465405, -1.04346855790547, 0.9469478413765511, 1.0, -1.2981849307276936, 0.48757875834761, -0.11467714710079141, 1.0, 1.6394188074272766, -0.2752369019255835, 1.8214789156694926, 1.0, -0.5415329608949441, -0.4258809989838044, 0.08603025584238087, 1.0, 0.6444511631221037, -0.49934552212954736, 0.8729497405284294, 1.0, 0.8399456934361904, 1.1216109170262165, -0.14915660179284623, 1.0, -0.8253361359380126, -1.071547031580336, -0.3552154461396035, 1.0, -0.4425776305335297, 0.06964108128322424, 2.542001542884602, 1.0, -0.40301211330233366, 1.7464074593319672, 0.5143436384356371, 1.0, -2.2557158274517657, 0.5619639317160314, 0.3120432238081371, 1.0, -1.0923827283876486, -1.0702012075341787, -0.1043029448180102, 1.0, 1.0327256787033112, 0.0812987536841212, 0.7251517844740405, 1.0, 0.8986651747785349, -0.08636136301050269, 1.1260293675623478, 1.0, 0.08864828011940648, -0.3453603475529107, -0.562742773434203, 1.0, 2.0614928486499484, -0.9138755589568236, -0.10427536907339392, 1.0, -1.0450709100868092, -0.4619811435085075, 0.4760774841149303, 1.0, 1.0259367819933256, -0.7531085670751686, 0.39622626286318213, 1.0, 0.931483848300485, -0.609477192364502, 0.09534846546060283, 1.0, -0.8951622879378146, 1.5347902892127627, -0.7280893841260588, 1.0, -1.3546154279522757, -1.3928344493349305, 0.7029899745715874, 1.0, -0.3054448495844661, -0.8917187393350215, -1.4831348270503317, 1.0, 1.3903772536024233, 0.5434739607147958, -2.035267653267554, 1.0, -0.9634359172187611, -0.6148417890344433, 0.14203428634204304, 1.0, 1.1014157026684652, -0.07630813766408756, 0.9333345936198553, 1.0, 2.2571788800967862, 0.07965182961291509, -2.812711885526605, 1.0, 0.6585273835740566, -1.2404295225386202, -0.033112246324242076, 1.0, 0.9675293698848481, 0.9259518965434401, -1.2720525117096593, 1.0, 1.660943315031462, 0.007949872831523546, -0.1741372029645571, 1.0, -0.619128204323947, 1.3267140688529482, -0.5859906878535595, 1.0, 1.5367569172606028, 0.9777237011742471, -0.029043330101878064, 1.0, 0.38368146504015943, 0.3511774639042602, 1.2913220379531716, 1.0, -0.7948111083820407, -0.07901555647363757, 2.155535424881909, 1.0, -1.2467686671738465, 0.8693020044494466, 0.5648434717346286, 1.0, 0.09997975368133799, -1.8035765846367517, -0.9942967957630623, 1.0, 0.505044674308031, -2.0331376777817307, -1.5449674208288011, 1.0, 0.49653541449977373, -0.25824143882498224, -1.550277362836775, 1.0, -1.2082567656570797, 0.41334629948017193, 0.5046807451293693, 1.0, 0.996751446575785, 0.444763812429544, -0.0021985942509696495, 1.0, -1.3878264218394532, 0.9563732073634094, 0.2634586237085587, 1.0, -0.4084717611607796, -0.785693140907669, -0.4975445853965604, 1.0, 0.9890288790940532, -1.6487218584314798, -0.44400135599399376, 1.0, -0.43051695092757747, 1.366686119431638, -1.0639861914569488, 1.0, 0.4398625075037104, -0.8584759161842423, -0.4230924029772411, 1.0, -1.4187835239986764, 0.7583838560986566, 0.7759129539147803, 1.0, -1.6716030688109573, 0.7736339326606407, 1.0152134317148072, 1.0, 0.3567836752299943, -1.4106935588076086, 0.05075579973209152, 1.0, 0.5694262708602847, 0.3915623898767393, -0.5540928543129299, 1.0, 1.515110837329568, -0.30512222069059075, 0.6659380871179235, 1.0, 0.6733158271780763, 0.14312224681376057, 0.3504060272396647, 1.0, -0.7518176832745431, -1.441900639039726, 0.9418992123758384, 1.0, -0.3464251987738385, -0.13342924693372138, -0.19460225357812314, 1.0, -1.272988818968966, 0.6455746152914307, 0.3566481958709262, 1.0, 0.981251514387865, 1.2426737702762214, 0.08178052948717138, 1.0, -1.0176075992913447, 1.4272117042490284, -1.5006846001384866, 1.0, 0.8076281031774942, 1.463571621586231, 1.3741871771414789, 1.0, 0.4590599291848778, -0.32893784191466274, 0.723832494556009, 1.0, 1.7832238968592213, 0.03145372120285418, 0.19391693754420175, 1.0, 0.6913296406811296, 2.1118982935841264, 0.8688025229294168, 1.0, -2.0705569840901807, 0.8005754683861751, -0.3339069402958601, 1.0, 1.5173618867184544, -1.164577155843898, 1.97338926600841, 1.0, 1.0491667872363275, 0.19065115295940033, 0.7910504336298549, 1.0, -0.9079287109785003, 2.036533932407832, 1.661390833151257, 1.0, 0.9910564237640536, 0.43584893216315646, 1.4944589576459488, 1.0, -0.9888525001942375, -0.7547246999932058, -0.4883943348388665, 1.0, -0.5788597018307833, -0.10465682952685537, 1.8093233612524564, 1.0, 0.7809606602120575, -2.1861414266227315, 0.8751099567624742, 1.0, 0.7279254097958942, -1.417228973817647, 0.6474163653372479, 1.0, -0.3538196486717172, -0.10688068636664562, 0.9382822712256773, 1.0, -0.582715886036253, 0.4993630781767581, -0.3555474359155919, 1.0, -0.7712292774565194, 0.9446201646322798, 1.0571982107318123, 1.0, -1.1446500801122863, -0.36888246930421664, -1.905408394828203, 1.0, -0.17132875435294617, 0.08251550545469515, -0.04645314116075843, 1.0, -2.1571810048938533, 0.024650425159614044, -1.9413031664447298, 1.0, -0.17967647045000065, 1.589869179463821, -1.099523660416745, 1.0, -0.19126521158174017, 0.30954234094774974, 0.15796011125271855, 1.0, -1.091102195528477, -1.2025000057961963, -0.6074602143917055, 1.0, 0.4141464614782298, 0.4806429121328498, -0.7569632208198132, 1.0, 0.2986291801851538, -1.562097708037234, 0.54104474914333, 1.0, 1.2788647341734487, -1.3762806281773952, -1.375422041070386, 1.0, -0.9631117633032436, -0.10468542375216536, 0.36935073294854065, 1.0, 1.5381761227809885, -0.49982797828729114, -1.1522086351902567, 1.0, -0.45174654016647187, 1.207860392200116, 1.8690828317429071, 1.0, 0.6842432160714564, 1.228943332490587, -0.6847085960386468, 1.0, 1.3618248634534105, -1.3876056793187523, -0.2968711977534058, 1.0, 0.2508296346918556, 0.28347349653516873, -0.6108897231680894, 1.0, -1.3303849023696288, -0.7400965166174244, -0.8674495183570061, 1.0, -1.907926770403272, -0.6522364016364478, -0.9456513934507239, 1.0, 0.36332937542884886, -0.2879904185787974, -0.2737659532514723, 1.0, -0.9670863676678985, -0.9056117703499826, -1.567435469303981, 1.0, 0.6721503770011017, -2.455684026000289, 1.995221575395602, 1.0, 1.6443805156567135, 0.8623978085335898, 0.20599211566859138, 1.0, 1.0776847779238905, -0.27333365462440523, 0.012009543322827877, 1.0, -0.7456084664312259, 0.41381274896950865, -1.0091734456279042, 1.0, 0.9929511540009799, 1.2795186487518457, -1.5255724422426324, 1.0, 0.4504513012871789, -0.39739435069248796, -0.38787654298384044, 1.0, 1.3440815392213685, -0.4804049380383797, 0.3915573434184697, 1.0, 0.9281540451438515, 0.6075478479321758, 0.283743988165453, 1.0, -1.2663335494725039, 1.0154833127495906, -1.4745351682375871, 1.0, -1.4169563826139926, 1.545735771868328, -1.1831579939706602, 1.0, 2.291637100150075, 0.07977088996806363, 1.5014581072473236, 1.0, 0.9458177537726823, -0.6726968069596743, -0.8468203444654386, 1.0, -1.009239565687428, -0.4384849571307584, -0.8885188372191196, 1.0, -0.3693152942820447, 3.10484316204786, 0.9284896903880031, 1.0, 0.023032050835803116, -1.455587409115083, -0.9723048942928324, 1.0, 0.5555357751773838, 0.06959234562810629, -0.35817558451003734, 1.0, 0.5565378569543468, -1.2094872950273534, 2.346890854481335, 1.0, -2.0397311281177037, -0.1610972262535638, 0.24045188582120894, 1.0, -1.47902750617526, -1.6266638214056226, -0.16185436085355442, 1.0, -0.21927757557600663, -0.7675597320799415, 0.010054647469424822, 1.0, 0.04348085841882192, -2.0633596263526637, -1.0599604022354536, 1.0, -1.0232612689585177, -0.003813996317254747, -1.228593302636535, 1.0, -0.36220688592178524, 0.265556611230377, -0.1621035187891544, 1.0, -1.4574643673706638, 0.1074036035176628, -0.0692283166002228, 1.0, -0.2881021725019173, -0.20820545438410426, -0.6550706137195695, 1.0, -1.4300458342154072, 1.1473830924490913, -0.39126912209999953, 1.0, 0.11442750707523591, -0.45986527418308104, -2.6986286705718756, 1.0, -0.4826737254051647, -0.09691924979706615, 0.5623538613164009, 1.0, -0.5969495259841867, 1.9369796267028097, -1.6395238052266394, 1.0, 0.03959752077179156, -0.5549863443351496, 0.43144024326591834, 1.0, 0.05338619356766181, -0.7868782827252093, -0.3534256584604031, 1.0, -0.4516125639150729, 0.9369882604811653, -1.4410465989250718, 1.0, -1.2825190382768958, 0.20693630287009077, -0.6524185737577876, 1.0, -1.218076468358509, -0.6072117560606378, 0.2970090266131787, 1.0, 0.5046346725689292, 0.599438879214956, -0.4442047417419706, 1.0, 0.051145460850739254, 0.6615269173742441, 0.045395886566896373, 1.0, -0.35849417148298474, 1.167274433264556, -0.08209011657264433, 1.0, -0.4210047448028052, -1.8825933217262516, -0.20949173072783595, 1.0, 0.7168371452635752, -0.3105391284609228, -0.17379492243379766, 1.0, 0.08593447870208855, -0.91644787210165, -0.6957029557326991, 1.0, -2.1562167372282226, -0.5917076062109913, -0.4250047388273272, 1.0, -0.3437360506539229, -0.796622438761538, 1.0354877194801808, 1.0, 1.2936566262578093, 0.6628569498300536, 0.10610977388785887, 1.0, -0.8629902089734234, -0.6140850509906667, 0.3180344294984242, 1.0, -2.332796403133254, 1.1803480240450217, -1.9985445303780567, 1.0, 0.3196938168792201, 0.5122838729832194, -0.878371786660287, 1.0, 0.9686628643572288, 1.0856272066067512, 1.1317039328573455, 1.0, 1.6057961822895834, 0.2732198469961998, -1.6653207033671051, 1.0, 0.3869557723720786, 1.8203128925954923, -0.8839025960908546, 1.0, -1.2480964464612287, 1.1756182133293311, -1.8896147112009032, 1.0, -0.1527032863207559, 1.5368871323370192, -2.0777563332784106, 1.0, 0.9439941657221124, 1.2563984449120202, 1.0089003839510835, 1.0, -0.9344433291766779, 1.2613593096585005, 0.04289233402247061, 1.0, 0.9294104546719673, 0.3661757757515152, -1.9475088489994803, 1.0, 0.3334765060935068, -0.5611040120213016, 0.46698979621757125, 1.0, 0.17033116311303909, 0.17101771234679522, -2.289775687784002, 1.0, 1.1006207746482812, -0.007948085300746224, 1.7986770956617728, 1.0, 0.5325486967015276, 2.2745467700705113, 0.2111362692450089, 1.0, 1.4691069942583552, -0.5006172897223152, 0.14344393617737922, 1.0, -1.0703005665874215, 1.8901483567123714, 0.6546455235587365, 1.0, 0.14028042427782314, -0.39379432530620684, -1.0843487848542441, 1.0, -1.5975998234602862, -0.49955092747843644, -0.968955203682131, 1.0, -0.3853943778176675, -1.8071868034495762, -1.5866359148850833, 1.0, -1.12113080565736, -0.9797878293003003, -0.6572059229267485, 1.0, 0.2813931021739255, 2.0461680103106206, -0.7287983196845934, 1.0, -0.5762916018886514, -2.435489837645655, -0.2454133032502592, 1.0, -0.4635253815378255, 1.565919124266517, -0.3217130117240793, 1.0, -1.743502489738472, -0.16007861623009656, -1.010978172646971, 1.0, 0.18288586737386767, 0.562750871100022, 0.6106801491607508, 1.0, 0.8580234753033175, -0.9106128147979123, 0.4386669019162586, 1.0, -1.5253159564618373, 0.389931554488951, 0.17868752694361972, 1.0, 1.5727847863964857, 0.15654008381650955, -0.07033310218149648, 1.0, -0.025762263621873914, -0.032480881985664685, 0.635492853389366, 1.0, 1.1295544329421265, -1.9214714162471398, 0.8641518963617287, 1.0, 0.23409128663731482, -0.32712837598282124, -1.3878369770759904, 1.0, 0.4361444808661877, -0.40171939126169154, -1.461419986510077, 1.0, -0.6320769159279417, 2.0754860297136224, 0.3357775152642312, 1.0, 0.00332645402861514, -0.6865873414829496, 1.7649123878997854, 1.0, -0.1445620023442053, 1.739144938611125, 0.4295619129590346, 1.0, 0.0923529035975692, 0.6386590166643906, -0.0275626978195804, 1.0, 0.8625713994553237, -1.4746123580437884, 0.392335620975203, 1.0, 0.6054611932175082, 0.8074983520100748, 1.9296012775261713, 1.0, 0.4051303294708405, -1.1121542367304937, 0.06260861472912607, 1.0, 0.794907444886997, 0.2066593132102508, 0.07935081946410244, 1.0, 1.679257877915808, 0.6360785329365144, 0.34489139818851483, 1.0, -0.4918893515014782, -0.8855601011914643, 0.8861534466469351, 1.0, -0.9565214545585928, -0.23080831659193704, 0.9948747373242627, 1.0, -0.27152579874217664, 1.3220002540144036, -0.2324582821741844, 1.0, -1.0020073021816944, -0.38410011114108245, 0.6539120865165207, 1.0, 0.891816639616775, -0.27686929161847823, -1.0797079338105366, 1.0, 0.3760291468051917, 0.5265066664040109, -0.5127286660571436, 1.0, -0.09664353676019515, -0.5822031301789227, 0.33974140034775835, 1.0, 0.5006951478333552, -1.4877487494956194, -0.5452345500834012, 1.0, -0.1831834188630196, -1.1640123498887525, 1.2304043623557712, 1.0, 0.4838114313788829, 0.3911947964074349, 0.9468229778892755, 1.0, 1.3597245734588381, 0.9336576346921429, 0.28872820127564147, 1.0, -0.5835226497990853, 1.6210009735399626, -0.46922461788065284, 1.0, 0.2155726932861872, -1.0657492621675597, -0.21760344616149743, 1.0, -1.1515260569074517, 0.019810651764233012, -1.2019011629147354, 1.0, -1.2754461956471754, 1.9078907165445096, 0.7281287328310526, 1.0, 0.4061839650821971, 0.5864961397052716, 0.9441338740570385, 1.0, -0.7343079603808471, 0.6175249066066457, -2.7304999494153908, 1.0, 0.36093948669342285, -0.5173804544373717, 0.49798519491529625, 1.0, 1.156363521734372, 0.2902611848892711, -0.7250918577543994, 1.0, 0.4672325156836289, 1.688108053274076, -0.3134089427028621, 1.0, 1.5681520658779156, 0.12164875755208905, 0.31633347641432863, 1.0, 1.570722683830538, -0.33781113626800663, -0.5386933763223761, 1.0, -1.731260954340537, 0.603526089854263, 1.7165574183146506, 1.0, -0.008346923910672432, -1.7455715202354514, 1.1600124402259553, 1.0, -0.7389675179440622, 0.14484592091070264, -0.8348230695413468, 1.0, -0.3057077009920373, 1.7346804222005017, 0.7365452113799091, 1.0, 1.5381803607841151, -0.8002125727469507, -0.1589736457127871, 1.0, -1.1476389735441856, 2.511406554092563, -1.8590033768352197};
inline const std::vector<double> logit_y_5 = {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0};
inline const std::vector<double> logit_expected_5 = {-1.1013550042878575, 0.15984443895512257, 5.572662021588731e-12, -0.5178889710916351, 0.15284155522242998, 0.0007030057619678725, 0.3676088384681708, 0.14722757250056517, 0.012529312992362575, -0.35820496141572156, 0.15058375099120225, 0.017370243904612285};
// logit_cases: meta {n, k}; expected per coef {beta, se, p_wald_normal}
inline const std::vector<double> logit_meta = {60.0, 2.0, 120.0, 3.0, 200.0, 2.0, 80.0, 4.0, 150.0, 3.0, 250.0, 4.0};
}  // namespace oracle
