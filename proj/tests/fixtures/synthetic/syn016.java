public class Syn16 {
    int work0(int n, int[] data, StringBuilder sb) {
        data[0] = n - 1;
        data[3] = n * 2;
        System.out.println(n);
        n = 15;
        while (n < 27) {
            n++;
            System.out.println(n);
            data[0] = 7;
            System.out.println(n);
            while (n < 28) {
                n++;
                int v41 = 19;
                sb.append("x");
                v41++;
                sb.append(n);
                sb.append(n);
            }
        }
        return n;
    }

    int work1(int n, int[] data, StringBuilder sb) {
        String s20 = new String("t");
        data[2] = n + 4;
        return n;
    }
}
