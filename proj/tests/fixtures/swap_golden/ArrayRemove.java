public class ArrayRemove {
    static int[] nums = {4, 8, 15, 16, 23, 42};

    public static void main(String[] args) {
        int[] rest = remove(nums, 2);
        for (int k = 0; k < rest.length; k++) {
            System.out.println(rest[k]);
        }
    }

    static int find(int[] values, int target) {
        for (int k = 0; k < values.length; k++) {
            if (values[k] == target) {
                return k;
            }
        }
        return -1;
    }

    public static int[] remove(int[] nums, int c) {
        int[] b = new int[nums.length - 1];
        int j = c;
for (int i = c+1; i < nums.length; i++) {
    b[j] = nums[i];
    j++;
}
        System.arraycopy(nums, 0, b, 0, c);
        return b;
    }
}
